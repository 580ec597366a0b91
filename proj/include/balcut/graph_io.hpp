#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "balcut/graph.hpp"

namespace balcut {

enum class GraphFormat { EdgeList, Metis };

GraphFormat parse_graph_format(const std::string& name);

struct EdgeListData {
  std::size_t n = 0;
  std::vector<WeightedEdge> edges;
};

// "n m" header, then m lines "u v [w]" with 0-indexed endpoints. '#' starts a comment.
EdgeListData read_edge_list(std::istream& in);
// METIS adjacency format, 1-indexed, '%' comments, fmt 0/1/10/11 on the header.
EdgeListData read_metis(std::istream& in);

struct LoadedGraph {
  Graph graph;
  std::vector<std::size_t> original_ids;  // local vertex -> id in the file
};

LoadedGraph load_graph(const std::string& path, GraphFormat format, bool largest_component_only);

void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace balcut
