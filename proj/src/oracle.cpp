#include "balcut/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "balcut/error.hpp"
#include "balcut/sdp.hpp"

namespace balcut {

VertexSet SweepTable::prefix(std::size_t count, std::size_t universe) const {
  if (count > order.size()) fail(ErrorCode::InvalidArgument, "prefix longer than sweep order");
  return VertexSet::from_indices(universe, std::span(order.data(), count));
}

SweepTable sweep_prefixes(const Graph& g, std::vector<std::size_t> order, std::size_t limit) {
  const std::size_t n = g.num_vertices();
  SweepTable t;
  t.order = std::move(order);
  limit = std::min(limit, std::min(t.order.size(), n - 1));
  std::vector<char> in(n, 0);
  const double total = g.total_volume();
  double vol = 0.0, cut = 0.0;
  t.mu.reserve(limit);
  t.conductance.reserve(limit);
  for (std::size_t i = 0; i < limit; ++i) {
    std::size_t v = t.order[i];
    double inner = 0.0;
    for (const auto& nb : g.neighbors(v)) {
      if (in[nb.vertex]) inner += nb.weight;
    }
    in[v] = 1;
    vol += g.degree(v);
    cut += g.degree(v) - 2.0 * inner;
    t.mu.push_back(vol / total);
    t.conductance.push_back(std::max(cut, 0.0) / std::min(vol, total - vol));
  }
  return t;
}

SweepTable radial_sweep(const Embedding& emb, const Graph& g, double b) {
  const std::size_t n = g.num_vertices();
  if (emb.num_vertices() != n) fail(ErrorCode::DimensionMismatch, "embedding size");
  auto r2 = emb.radius_sq();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) { return r2[a] > r2[c]; });
  auto mu = g.mu();
  double acc = 0.0;
  std::size_t z = n;  // 1-based
  for (std::size_t i = 0; i < n; ++i) {
    acc += mu[order[i]];
    if (acc >= b / 8.0) {
      z = i + 1;
      break;
    }
  }
  return sweep_prefixes(g, std::move(order), z - 1);
}

OracleResult run_oracle(const Embedding& emb, const Graph& g, double b, double gamma,
                        const OracleConfig& config) {
  if (!(b > 0.0 && b <= 0.5)) fail(ErrorCode::InvalidParams, "b must lie in (0, 1/2]");
  if (!(gamma > 0.0)) fail(ErrorCode::InvalidParams, "gamma must be positive");
  const std::size_t n = g.num_vertices();
  if (emb.num_vertices() != n) fail(ErrorCode::DimensionMismatch, "embedding size");
  if (std::abs(emb.variance() - 1.0) > config.variance_tolerance) {
    fail(ErrorCode::PreconditionViolated, "oracle needs unit spread, got " + std::to_string(emb.variance()));
  }
  OracleResult res;
  res.edge_energy = edge_energy(emb, g);
  if (res.edge_energy >= config.edge_energy_factor * gamma) {
    res.kind = OracleCase::EdgeEnergy;
    res.dual.alpha = gamma;
    return res;
  }

  auto mu = g.mu();
  auto r2 = emb.radius_sq();
  const double threshold = 32.0 * (1.0 - b) / b;
  std::vector<char> in_r(n);
  double mu_r = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    in_r[i] = r2[i] <= threshold;
    if (in_r[i]) mu_r += mu[i];
  }
  res.mu_r = mu_r;
  if (1.0 - mu_r > b / (32.0 * (1.0 - b)) + 1e-9) {
    fail(ErrorCode::PreconditionViolated, "Markov bound on large radii violated");
  }
  double spread = 0.0;
  if (mu_r > 0.0) {
    for (std::size_t r = 0; r < emb.dim(); ++r) {
      auto c = emb.coordinate(r);
      double m = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (in_r[i]) m += mu[i] * c[i];
      }
      m /= mu_r;
      for (std::size_t i = 0; i < n; ++i) {
        if (in_r[i]) spread += mu[i] * (c[i] - m) * (c[i] - m);
      }
    }
    spread = 2.0 * spread / mu_r;
  }
  res.r_spread = spread;
  if (spread >= config.roundable_threshold) {
    res.kind = OracleCase::Roundable;
    return res;
  }

  SweepTable sweep = radial_sweep(emb, g, b);
  res.sweep_size = sweep.size();
  const double limit = config.sweep_constant * std::sqrt(gamma) + 1e-12;
  std::size_t best = 0;
  for (std::size_t i = sweep.size(); i > 0; --i) {
    if (sweep.conductance[i - 1] <= limit) {
      best = i;
      break;
    }
  }
  if (best == 0) fail(ErrorCode::SweepCutMissing, "no radial sweep cut below the conductance threshold");
  res.kind = OracleCase::SweepCut;
  res.cut = sweep.prefix(best, n);
  res.cut_conductance = sweep.conductance[best - 1];
  res.dual.alpha = 7.0 * gamma / 8.0;
  res.dual.beta.reserve(best);
  for (std::size_t v : res.cut) res.dual.beta.emplace_back(v, mu[v] * gamma);
  return res;
}

CheegerSweep cheeger_sweep_bound(const Graph& g, std::span<const double> x, std::size_t k, double sigma) {
  const std::size_t n = g.num_vertices();
  if (x.size() != n) fail(ErrorCode::DimensionMismatch, "vector size");
  if (!(sigma > 0.0)) fail(ErrorCode::PreconditionViolated, "sigma must be positive");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) { return x[a] > x[c]; });
  auto mu = g.mu();
  double supp_mu = 0.0, mass = 0.0;
  std::size_t supp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] < 0.0) fail(ErrorCode::PreconditionViolated, "x must be non-negative");
    if (x[i] > 0.0) {
      supp_mu += mu[i];
      ++supp;
    }
    mass += g.degree(i) * x[i] * x[i];
  }
  if (supp_mu > 0.5 + 1e-12) fail(ErrorCode::PreconditionViolated, "support of x exceeds half the volume");
  if (mass > 1.0 + 1e-12) fail(ErrorCode::PreconditionViolated, "sum d_i x_i^2 exceeds 1");
  if (k < 1 || k > supp) fail(ErrorCode::PreconditionViolated, "k must index the support of x");
  double tail = 0.0;
  for (std::size_t i = k - 1; i < n; ++i) tail += g.degree(order[i]) * x[order[i]] * x[order[i]];
  if (tail < sigma * (1.0 - 1e-12)) fail(ErrorCode::PreconditionViolated, "tail mass below sigma");

  SweepTable sweep = sweep_prefixes(g, order, supp);
  CheegerSweep out;
  out.bound = std::sqrt(2.0 * laplacian_quadratic(g, x)) / sigma;
  std::size_t best = 0;
  for (std::size_t h = k; h <= sweep.size(); ++h) {
    if (best == 0 || sweep.conductance[h - 1] < sweep.conductance[best - 1]) best = h;
  }
  if (best == 0 || sweep.conductance[best - 1] > out.bound + 1e-12) {
    fail(ErrorCode::NoQualifyingSweep, "no prefix meets the sweep bound");
  }
  out.h = best;
  out.conductance = sweep.conductance[best - 1];
  out.cut = sweep.prefix(best, n);
  return out;
}

}  // namespace balcut
