#include "balcut/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "balcut/error.hpp"

namespace balcut {

namespace {

void check_cut(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.num_vertices()) {
    fail(ErrorCode::DimensionMismatch, "vertex set universe " + std::to_string(s.universe()) +
                                           " != n = " + std::to_string(g.num_vertices()));
  }
  if (s.empty() || s.is_full()) fail(ErrorCode::EmptyOrFullCut, "cut side must be a proper subset");
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const WeightedEdge> edges) {
  if (n == 0) fail(ErrorCode::InvalidGraph, "graph has no vertices");
  std::vector<WeightedEdge> merged;
  merged.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      fail(ErrorCode::InvalidGraph, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        ") outside vertex range");
    }
    if (e.u == e.v) fail(ErrorCode::InvalidGraph, "self-loop at vertex " + std::to_string(e.u));
    if (!(e.w > 0.0) || !std::isfinite(e.w)) {
      fail(ErrorCode::InvalidGraph, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        ") has non-positive or non-finite weight");
    }
    merged.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.w});
  }
  std::sort(merged.begin(), merged.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (out > 0 && merged[out - 1].u == merged[i].u && merged[out - 1].v == merged[i].v) {
      merged[out - 1].w += merged[i].w;
    } else {
      merged[out++] = merged[i];
    }
  }
  merged.resize(out);

  Graph g;
  g.degrees_.assign(n, 0.0);
  std::vector<std::size_t> counts(n, 0);
  for (const auto& e : merged) {
    g.degrees_[e.u] += e.w;
    g.degrees_[e.v] += e.w;
    ++counts[e.u];
    ++counts[e.v];
    g.total_weight_ += e.w;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (counts[v] == 0) fail(ErrorCode::InvalidGraph, "vertex " + std::to_string(v) + " has degree zero");
  }
  auto labels = connected_components(n, merged);
  if (*std::max_element(labels.begin(), labels.end()) != 0) {
    fail(ErrorCode::DisconnectedGraph, "graph is not connected");
  }

  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + counts[v];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : merged) {
    g.adjacency_[fill[e.u]++] = {e.v, e.w};
    g.adjacency_[fill[e.v]++] = {e.u, e.w};
  }
  g.edges_ = std::move(merged);

  const double vol = g.total_volume();
  g.mu_.resize(n);
  g.sqrt_degrees_.resize(n);
  g.inv_sqrt_degrees_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    g.mu_[v] = g.degrees_[v] / vol;
    g.sqrt_degrees_[v] = std::sqrt(g.degrees_[v]);
    g.inv_sqrt_degrees_[v] = 1.0 / g.sqrt_degrees_[v];
  }
  return g;
}

std::vector<std::size_t> connected_components(std::size_t n, std::span<const WeightedEdge> edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& e : edges) {
    std::size_t a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> label(n), root_label(n, n);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = find(v);
    if (root_label[r] == n) root_label[r] = next++;
    label[v] = root_label[r];
  }
  return label;
}

Subgraph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices) {
  Subgraph sub;
  sub.vertices.assign(vertices.begin(), vertices.end());
  std::sort(sub.vertices.begin(), sub.vertices.end());
  std::vector<std::size_t> local(g.num_vertices(), g.num_vertices());
  for (std::size_t i = 0; i < sub.vertices.size(); ++i) local[sub.vertices[i]] = i;
  for (const auto& e : g.edges()) {
    if (local[e.u] < g.num_vertices() && local[e.v] < g.num_vertices()) {
      sub.edges.push_back({local[e.u], local[e.v], e.w});
    }
  }
  return sub;
}

Subgraph largest_component(std::size_t n, std::span<const WeightedEdge> edges) {
  auto labels = connected_components(n, edges);
  std::vector<std::size_t> sizes(n, 0);
  for (auto l : labels) ++sizes[l];
  std::size_t best = static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  Subgraph sub;
  std::vector<std::size_t> local(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    if (labels[v] == best) {
      local[v] = sub.vertices.size();
      sub.vertices.push_back(v);
    }
  }
  for (const auto& e : edges) {
    if (e.u < n && e.v < n && local[e.u] < n && local[e.v] < n) {
      sub.edges.push_back({local[e.u], local[e.v], e.w});
    }
  }
  return sub;
}

double volume(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.num_vertices()) fail(ErrorCode::DimensionMismatch, "vertex set universe mismatch");
  double vol = 0.0;
  for (std::size_t v : s) vol += g.degree(v);
  return vol;
}

double mu_of(const Graph& g, const VertexSet& s) { return volume(g, s) / g.total_volume(); }

double cut_weight(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.num_vertices()) fail(ErrorCode::DimensionMismatch, "vertex set universe mismatch");
  double cut = 0.0;
  for (std::size_t v : s) {
    for (const auto& nb : g.neighbors(v)) {
      if (!s.contains(nb.vertex)) cut += nb.weight;
    }
  }
  return cut;
}

double balance(const Graph& g, const VertexSet& s) {
  double m = mu_of(g, s);
  return std::min(m, 1.0 - m);
}

double conductance(const Graph& g, const VertexSet& s) {
  check_cut(g, s);
  double vol = volume(g, s);
  return cut_weight(g, s) / std::min(vol, g.total_volume() - vol);
}

bool is_b_balanced(const Graph& g, const VertexSet& s, double b) {
  double vol = volume(g, s);
  double total = g.total_volume();
  return std::min(vol, total - vol) >= b * total - 1e-12 * total;
}

void laplacian_apply(const Graph& g, std::span<const double> x, std::span<double> out) {
  const std::size_t n = g.num_vertices();
  if (x.size() != n || out.size() != n) fail(ErrorCode::DimensionMismatch, "laplacian_apply size");
  for (std::size_t i = 0; i < n; ++i) {
    double acc = g.degree(i) * x[i];
    for (const auto& nb : g.neighbors(i)) acc -= nb.weight * x[nb.vertex];
    out[i] = acc;
  }
}

std::vector<double> laplacian_apply(const Graph& g, std::span<const double> x) {
  std::vector<double> out(g.num_vertices());
  laplacian_apply(g, x, out);
  return out;
}

double laplacian_quadratic(const Graph& g, std::span<const double> x) {
  if (x.size() != g.num_vertices()) fail(ErrorCode::DimensionMismatch, "laplacian_quadratic size");
  double acc = 0.0;
  for (const auto& e : g.edges()) {
    double d = x[e.u] - x[e.v];
    acc += e.w * d * d;
  }
  return acc;
}

}  // namespace balcut
