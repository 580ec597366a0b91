#include "balcut/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "balcut/error.hpp"
#include "balcut/oracle.hpp"
#include "balcut/parallel.hpp"

namespace balcut {

namespace {

struct Candidate {
  bool valid = false;
  double conductance = 0.0;
  double mu = 0.0;
  std::vector<std::size_t> members;  // sorted
  std::size_t trial = 0;
};

bool better(const Candidate& a, const Candidate& b) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  if (a.conductance != b.conductance) return a.conductance < b.conductance;
  return a.members < b.members;
}

}  // namespace

double balance_constant(double b) {
  if (!(b > 0.0 && b <= 0.5)) fail(ErrorCode::InvalidParams, "b must lie in (0, 1/2]");
  double sigma_sq = 32.0 * (1.0 - b) / b;
  double rho = 1.0 / (1536.0 * sigma_sq);
  return rho / 32.0;
}

std::size_t default_trials(std::size_t n) {
  return static_cast<std::size_t>(std::ceil(4.0 * std::log2(std::max<double>(2.0, static_cast<double>(n)))));
}

RoundedCut proj_round(const Embedding& emb, const Graph& g, double b, const RoundingConfig& config) {
  const std::size_t n = g.num_vertices();
  if (emb.num_vertices() != n) fail(ErrorCode::DimensionMismatch, "embedding size");
  if (n < 2) fail(ErrorCode::InvalidArgument, "rounding needs at least two vertices");
  const double c = config.c_balance ? *config.c_balance : balance_constant(b);
  if (!(c > 0.0 && c <= 0.5)) fail(ErrorCode::InvalidParams, "c_balance must lie in (0, 1/2]");
  const std::size_t trials = config.trials == 0 ? default_trials(n) : config.trials;
  const std::size_t d = emb.dim();
  const double root_d = std::sqrt(static_cast<double>(d));

  std::vector<Candidate> best(trials);
  parallel_for(trials, config.threads, [&](std::size_t t, std::size_t) {
    std::mt19937_64 rng(derive_seed(config.seed, 0x70726f6aULL, t));
    std::normal_distribution<double> normal;
    std::vector<double> u(d);
    double s = 0.0;
    for (auto& x : u) {
      x = normal(rng);
      s += x * x;
    }
    s = std::sqrt(s);
    std::vector<double> proj(n, 0.0);
    for (std::size_t r = 0; r < d; ++r) {
      double f = root_d * u[r] / s;
      auto col = emb.coordinate(r);
      for (std::size_t i = 0; i < n; ++i) proj[i] += f * col[i];
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c2) { return proj[a] > proj[c2]; });
    SweepTable sweep = sweep_prefixes(g, order, n - 1);
    Candidate cand;
    std::size_t pick = 0;
    for (std::size_t i = 1; i <= sweep.size(); ++i) {
      double m = sweep.mu[i - 1];
      if (m < c - 1e-12 || m > 1.0 - c + 1e-12) continue;
      if (pick == 0 || sweep.conductance[i - 1] < sweep.conductance[pick - 1]) pick = i;
    }
    if (pick == 0) return;
    cand.valid = true;
    cand.conductance = sweep.conductance[pick - 1];
    cand.mu = sweep.mu[pick - 1];
    cand.members.assign(sweep.order.begin(), sweep.order.begin() + static_cast<std::ptrdiff_t>(pick));
    std::sort(cand.members.begin(), cand.members.end());
    cand.trial = t;
    best[t] = std::move(cand);
  });

  Candidate winner;
  for (auto& cand : best) {
    if (better(cand, winner)) winner = std::move(cand);
  }
  if (!winner.valid) fail(ErrorCode::NoQualifyingSweep, "no projection sweep cut inside the volume window");
  RoundedCut out;
  out.cut = VertexSet::from_indices(n, winner.members);
  out.conductance = winner.conductance;
  out.balance = std::min(winner.mu, 1.0 - winner.mu);
  out.trial = winner.trial;
  return out;
}

}  // namespace balcut
