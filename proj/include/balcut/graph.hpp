#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "balcut/vertex_set.hpp"

namespace balcut {

struct WeightedEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  double w = 1.0;
};

struct Neighbor {
  std::size_t vertex;
  double weight;
};

// Connected undirected graph with positive edge weights, stored as CSR.
// Parallel edges are merged by summing weights.
class Graph {
 public:
  static Graph from_edges(std::size_t n, std::span<const WeightedEdge> edges);

  std::size_t num_vertices() const { return degrees_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  // m: total edge weight. The volume of V is 2m.
  double total_weight() const { return total_weight_; }
  double total_volume() const { return 2.0 * total_weight_; }

  std::span<const Neighbor> neighbors(std::size_t v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  double degree(std::size_t v) const { return degrees_[v]; }
  std::span<const double> degrees() const { return degrees_; }
  // mu_i = d_i / 2m
  std::span<const double> mu() const { return mu_; }
  std::span<const double> sqrt_degrees() const { return sqrt_degrees_; }
  std::span<const double> inv_sqrt_degrees() const { return inv_sqrt_degrees_; }
  // Merged edges with u < v.
  std::span<const WeightedEdge> edges() const { return edges_; }

 private:
  Graph() = default;

  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::vector<WeightedEdge> edges_;
  std::vector<double> degrees_;
  std::vector<double> mu_;
  std::vector<double> sqrt_degrees_;
  std::vector<double> inv_sqrt_degrees_;
  double total_weight_ = 0.0;
};

// Component label per vertex, labels numbered from 0 in order of first vertex.
std::vector<std::size_t> connected_components(std::size_t n, std::span<const WeightedEdge> edges);

struct Subgraph {
  std::vector<std::size_t> vertices;  // local index -> parent index
  std::vector<WeightedEdge> edges;    // in local indices
};

Subgraph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices);
Subgraph largest_component(std::size_t n, std::span<const WeightedEdge> edges);

double volume(const Graph& g, const VertexSet& s);
double mu_of(const Graph& g, const VertexSet& s);
double cut_weight(const Graph& g, const VertexSet& s);
// min(vol S, vol S-bar) / 2m
double balance(const Graph& g, const VertexSet& s);
double conductance(const Graph& g, const VertexSet& s);
bool is_b_balanced(const Graph& g, const VertexSet& s, double b);

void laplacian_apply(const Graph& g, std::span<const double> x, std::span<double> out);
std::vector<double> laplacian_apply(const Graph& g, std::span<const double> x);
double laplacian_quadratic(const Graph& g, std::span<const double> x);

}  // namespace balcut
