#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "balcut/graph.hpp"

namespace balcut {

struct GeneratedGraph {
  Graph graph;
  std::vector<VertexSet> planted;  // ground-truth low-conductance sides, if any
  std::string name;
};

GeneratedGraph path_graph(std::size_t n);
GeneratedGraph cycle_graph(std::size_t n);
GeneratedGraph grid_graph(std::size_t rows, std::size_t cols);
GeneratedGraph complete_graph(std::size_t n);
// Two copies of K_k; vertex i of each copy is joined for i < bridges.
GeneratedGraph barbell(std::size_t k, std::size_t bridges);
// A spine clique K_spine with a clique K_s hanging off spine vertex j for each
// leg size s = legs[j], attached by one edge of weight attach_weight.
GeneratedGraph caterpillar_of_cliques(std::size_t spine, const std::vector<std::size_t>& legs,
                                      double attach_weight, double spine_weight = 1.0);
// Uniform simple d-regular graph by the pairing model, resampled until simple and connected.
GeneratedGraph random_regular(std::size_t n, std::size_t d, std::uint64_t seed);
// Halves {0..n/2-1} and the rest; edges inside with p_in, across with p_out.
// Resampled until connected.
GeneratedGraph planted_bisection(std::size_t n, double p_in, double p_out, std::uint64_t seed);

// "name:arg,arg,..." e.g. "barbell:5,1", "random-regular:1024,3",
// "planted-bisection:100,0.3,0.02", "caterpillar:30,0.01,3,3,4".
GeneratedGraph generate(const std::string& spec, std::uint64_t seed);

}  // namespace balcut
