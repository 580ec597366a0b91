#include "balcut/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "balcut/error.hpp"

namespace balcut {

namespace {

VertexSet range_set(std::size_t universe, std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> idx(hi - lo);
  std::iota(idx.begin(), idx.end(), lo);
  return VertexSet::from_indices(universe, idx);
}

bool connected(std::size_t n, const std::vector<WeightedEdge>& edges) {
  auto labels = connected_components(n, edges);
  return std::all_of(labels.begin(), labels.end(), [](std::size_t l) { return l == 0; });
}

}  // namespace

GeneratedGraph path_graph(std::size_t n) {
  if (n < 2) fail(ErrorCode::InvalidParams, "path needs n >= 2");
  std::vector<WeightedEdge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1.0});
  return {Graph::from_edges(n, e), {}, "path"};
}

GeneratedGraph cycle_graph(std::size_t n) {
  if (n < 3) fail(ErrorCode::InvalidParams, "cycle needs n >= 3");
  std::vector<WeightedEdge> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, 1.0});
  return {Graph::from_edges(n, e), {}, "cycle"};
}

GeneratedGraph grid_graph(std::size_t rows, std::size_t cols) {
  if (rows * cols < 2) fail(ErrorCode::InvalidParams, "grid needs at least two vertices");
  std::vector<WeightedEdge> e;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      std::size_t v = r * cols + c;
      if (c + 1 < cols) e.push_back({v, v + 1, 1.0});
      if (r + 1 < rows) e.push_back({v, v + cols, 1.0});
    }
  }
  return {Graph::from_edges(rows * cols, e), {}, "grid"};
}

GeneratedGraph complete_graph(std::size_t n) {
  if (n < 2) fail(ErrorCode::InvalidParams, "complete graph needs n >= 2");
  std::vector<WeightedEdge> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j, 1.0});
  }
  return {Graph::from_edges(n, e), {}, "complete"};
}

GeneratedGraph barbell(std::size_t k, std::size_t bridges) {
  if (k < 2 || bridges < 1 || bridges > k) fail(ErrorCode::InvalidParams, "barbell needs k >= 2, 1 <= bridges <= k");
  std::vector<WeightedEdge> e;
  for (std::size_t side = 0; side < 2; ++side) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) e.push_back({side * k + i, side * k + j, 1.0});
    }
  }
  for (std::size_t i = 0; i < bridges; ++i) e.push_back({i, k + i, 1.0});
  return {Graph::from_edges(2 * k, e), {range_set(2 * k, 0, k)}, "barbell"};
}

GeneratedGraph caterpillar_of_cliques(std::size_t spine, const std::vector<std::size_t>& legs,
                                      double attach_weight, double spine_weight) {
  if (spine < 2 || legs.size() > spine) fail(ErrorCode::InvalidParams, "caterpillar needs spine >= 2 and at most one leg per spine vertex");
  std::vector<WeightedEdge> e;
  for (std::size_t i = 0; i < spine; ++i) {
    for (std::size_t j = i + 1; j < spine; ++j) e.push_back({i, j, spine_weight});
  }
  std::size_t next = spine;
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (std::size_t l = 0; l < legs.size(); ++l) {
    std::size_t s = legs[l];
    if (s < 2) fail(ErrorCode::InvalidParams, "legs need at least two vertices");
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = i + 1; j < s; ++j) e.push_back({next + i, next + j, 1.0});
    }
    e.push_back({l, next, attach_weight});
    ranges.emplace_back(next, next + s);
    next += s;
  }
  GeneratedGraph out{Graph::from_edges(next, e), {}, "caterpillar"};
  for (auto [lo, hi] : ranges) out.planted.push_back(range_set(next, lo, hi));
  return out;
}

GeneratedGraph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d < 1 || d >= n || (n * d) % 2 != 0) fail(ErrorCode::InvalidParams, "random-regular needs 1 <= d < n and n*d even");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> stubs(n * d);
  for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = i / d;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<WeightedEdge> e;
    e.reserve(n * d / 2);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size() && simple; i += 2) {
      std::size_t a = std::min(stubs[i], stubs[i + 1]), b = std::max(stubs[i], stubs[i + 1]);
      simple = a != b && seen.insert({a, b}).second;
      e.push_back({a, b, 1.0});
    }
    if (simple && connected(n, e)) return {Graph::from_edges(n, e), {}, "random-regular"};
  }
  fail(ErrorCode::InvalidParams, "could not sample a simple connected regular graph");
}

GeneratedGraph planted_bisection(std::size_t n, double p_in, double p_out, std::uint64_t seed) {
  if (n < 4) fail(ErrorCode::InvalidParams, "planted bisection needs n >= 4");
  if (!(p_in > 0.0 && p_in <= 1.0 && p_out > 0.0 && p_out <= 1.0)) {
    fail(ErrorCode::InvalidParams, "probabilities must lie in (0,1]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t half = n / 2;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<WeightedEdge> e;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        bool same = (i < half) == (j < half);
        if (unit(rng) < (same ? p_in : p_out)) e.push_back({i, j, 1.0});
      }
    }
    if (connected(n, e)) return {Graph::from_edges(n, e), {range_set(n, 0, half)}, "planted-bisection"};
  }
  fail(ErrorCode::InvalidParams, "could not sample a connected planted bisection");
}

GeneratedGraph generate(const std::string& spec, std::uint64_t seed) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::vector<double> args;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        args.push_back(std::stod(tok));
      } catch (const std::exception&) {
        fail(ErrorCode::InvalidArgument, "bad generator argument '" + tok + "'");
      }
    }
  }
  auto need = [&](std::size_t count) {
    if (args.size() < count) fail(ErrorCode::InvalidArgument, "generator '" + name + "' needs " + std::to_string(count) + " arguments");
  };
  auto z = [&](std::size_t i) {
    if (args[i] < 0.0 || args[i] != static_cast<double>(static_cast<std::size_t>(args[i]))) {
      fail(ErrorCode::InvalidArgument, "expected a non-negative integer argument");
    }
    return static_cast<std::size_t>(args[i]);
  };
  if (name == "path") { need(1); return path_graph(z(0)); }
  if (name == "cycle") { need(1); return cycle_graph(z(0)); }
  if (name == "grid") { need(2); return grid_graph(z(0), z(1)); }
  if (name == "complete") { need(1); return complete_graph(z(0)); }
  if (name == "barbell") { need(1); return barbell(z(0), args.size() > 1 ? z(1) : 1); }
  if (name == "random-regular") { need(2); return random_regular(z(0), z(1), seed); }
  if (name == "planted-bisection") { need(3); return planted_bisection(z(0), args[1], args[2], seed); }
  if (name == "caterpillar") {
    need(3);
    std::vector<std::size_t> legs;
    for (std::size_t i = 2; i < args.size(); ++i) legs.push_back(z(i));
    return caterpillar_of_cliques(z(0), legs, args[1]);
  }
  fail(ErrorCode::InvalidArgument, "unknown generator '" + name + "'");
}

}  // namespace balcut
