#include "balcut/graph_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "balcut/error.hpp"

namespace balcut {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  fail(ErrorCode::Parse, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokens_of(const std::string& line, char comment) {
  std::string body = line.substr(0, line.find(comment));
  std::istringstream ss(body);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::size_t to_index(const std::string& tok, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    parse_fail(line, "expected a non-negative integer, got '" + tok + "'");
  }
  return value;
}

double to_weight(const std::string& tok, std::size_t line) {
  double w = 0.0;
  try {
    std::size_t used = 0;
    w = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
  } catch (const std::exception&) {
    parse_fail(line, "expected a weight, got '" + tok + "'");
  }
  if (!(w > 0.0) || !std::isfinite(w)) parse_fail(line, "edge weight must be positive and finite");
  return w;
}

}  // namespace

GraphFormat parse_graph_format(const std::string& name) {
  if (name == "edgelist" || name == "edges") return GraphFormat::EdgeList;
  if (name == "metis") return GraphFormat::Metis;
  fail(ErrorCode::InvalidArgument, "unknown graph format '" + name + "'");
}

EdgeListData read_edge_list(std::istream& in) {
  EdgeListData data;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t declared = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = tokens_of(line, '#');
    if (tok.empty()) continue;
    if (!have_header) {
      if (tok.size() != 2) parse_fail(lineno, "header must be 'n m'");
      data.n = to_index(tok[0], lineno);
      declared = to_index(tok[1], lineno);
      have_header = true;
      data.edges.reserve(declared);
      continue;
    }
    if (tok.size() != 2 && tok.size() != 3) parse_fail(lineno, "edge line must be 'u v [w]'");
    WeightedEdge e{to_index(tok[0], lineno), to_index(tok[1], lineno), 1.0};
    if (tok.size() == 3) e.w = to_weight(tok[2], lineno);
    if (e.u >= data.n || e.v >= data.n) {
      parse_fail(lineno, "endpoint out of range [0, " + std::to_string(data.n) + ")");
    }
    if (e.u == e.v) parse_fail(lineno, "self-loop at vertex " + std::to_string(e.u));
    data.edges.push_back(e);
  }
  if (!have_header) parse_fail(lineno, "missing 'n m' header");
  if (data.edges.size() != declared) {
    parse_fail(lineno, "header declares " + std::to_string(declared) + " edges, found " +
                           std::to_string(data.edges.size()));
  }
  return data;
}

EdgeListData read_metis(std::istream& in) {
  EdgeListData data;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  bool edge_weights = false;
  std::size_t vertex_weights = 0;
  std::size_t declared = 0;
  std::size_t vertex = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '%') continue;
    auto tok = tokens_of(line, '%');
    if (!have_header) {
      if (tok.empty()) continue;
      if (tok.size() < 2 || tok.size() > 4) parse_fail(lineno, "header must be 'n m [fmt [ncon]]'");
      data.n = to_index(tok[0], lineno);
      declared = to_index(tok[1], lineno);
      if (tok.size() >= 3) {
        std::string fmt = tok[2];
        if (fmt.size() > 3 || fmt.find_first_not_of("01") != std::string::npos) {
          parse_fail(lineno, "unsupported fmt '" + fmt + "'");
        }
        fmt.insert(0, 3 - fmt.size(), '0');
        if (fmt[0] == '1') parse_fail(lineno, "vertex sizes are not supported");
        edge_weights = fmt[2] == '1';
        if (fmt[1] == '1') vertex_weights = tok.size() == 4 ? to_index(tok[3], lineno) : 1;
      }
      have_header = true;
      continue;
    }
    if (vertex >= data.n) {
      if (tok.empty()) continue;
      parse_fail(lineno, "more adjacency lines than the declared " + std::to_string(data.n) + " vertices");
    }
    if (tok.size() < vertex_weights) parse_fail(lineno, "missing vertex weights");
    std::size_t stride = edge_weights ? 2 : 1;
    if ((tok.size() - vertex_weights) % stride != 0) parse_fail(lineno, "dangling neighbour weight");
    for (std::size_t i = vertex_weights; i < tok.size(); i += stride) {
      std::size_t nb = to_index(tok[i], lineno);
      if (nb == 0 || nb > data.n) parse_fail(lineno, "neighbour out of range [1, " + std::to_string(data.n) + "]");
      --nb;
      if (nb == vertex) parse_fail(lineno, "self-loop at vertex " + std::to_string(vertex + 1));
      double w = edge_weights ? to_weight(tok[i + 1], lineno) : 1.0;
      if (vertex < nb) data.edges.push_back({vertex, nb, w});
    }
    ++vertex;
  }
  if (!have_header) parse_fail(lineno, "missing header");
  if (vertex != data.n) {
    parse_fail(lineno, "expected " + std::to_string(data.n) + " adjacency lines, found " + std::to_string(vertex));
  }
  if (data.edges.size() != declared) {
    parse_fail(lineno, "header declares " + std::to_string(declared) + " edges, found " +
                           std::to_string(data.edges.size()));
  }
  return data;
}

LoadedGraph load_graph(const std::string& path, GraphFormat format, bool largest_component_only) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
  EdgeListData data = format == GraphFormat::Metis ? read_metis(in) : read_edge_list(in);
  if (largest_component_only) {
    Subgraph sub = largest_component(data.n, data.edges);
    return {Graph::from_edges(sub.vertices.size(), sub.edges), std::move(sub.vertices)};
  }
  std::vector<std::size_t> ids(data.n);
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  return {Graph::from_edges(data.n, data.edges), std::move(ids)};
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  auto old = out.precision(std::numeric_limits<double>::max_digits10);
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (e.w != 1.0) out << ' ' << e.w;
    out << '\n';
  }
  out.precision(old);
}

}  // namespace balcut
