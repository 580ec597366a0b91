#include "balcut/expsketch.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "balcut/error.hpp"
#include "balcut/krylov.hpp"
#include "balcut/parallel.hpp"

namespace balcut {


SketchConfig SketchConfig::paper() {
  SketchConfig c;
  c.delta = 1.0 / 512.0;
  c.epsilon = 1.0 / 130.0;
  return c;
}

void SketchConfig::validate() const {
  if (!(delta > 0.0 && delta < 1.0)) fail(ErrorCode::InvalidParams, "sketch delta must lie in (0,1)");
  if (!(jl_constant > 0.0)) fail(ErrorCode::InvalidParams, "jl_constant must be positive");
  if (!(eta > 0.0 && eta < 1.0)) fail(ErrorCode::InvalidParams, "eta must lie in (0,1)");
  if (!(epsilon > 0.0 && epsilon < 1.0)) fail(ErrorCode::InvalidParams, "epsilon must lie in (0,1)");
  if (threads == 0) fail(ErrorCode::InvalidParams, "threads must be at least 1");
  if (max_krylov_dim < 2) fail(ErrorCode::InvalidParams, "max_krylov_dim must be at least 2");
}

std::size_t sketch_dimension(std::size_t n, const SketchConfig& config) {
  if (n < 2) return 1;
  double k = std::ceil(config.jl_constant * std::log(static_cast<double>(n)) / (config.delta * config.delta));
  return std::max<std::size_t>(1, static_cast<std::size_t>(k));
}

Embedding sketch_embedding(const Graph& g, const UpdateAccumulator& acc, const SketchConfig& config,
                           std::uint64_t stream, SketchStats* stats) {
  config.validate();
  if (&acc.graph() != &g) fail(ErrorCode::DimensionMismatch, "accumulator belongs to another graph");
  const std::size_t n = g.num_vertices();
  const std::size_t k = sketch_dimension(n, config);
  const bool exact = config.exact_when_saturated && k >= n;
  const std::size_t d = exact ? n : k;
  // A/2 = m eps D^{-1/2} H D^{-1/2}
  const double scale = g.total_weight() * config.epsilon;
  const std::size_t workers = std::max<std::size_t>(1, std::min(config.threads, d));
  std::vector<std::vector<double>> scratch(workers, std::vector<double>(n));
  std::vector<std::vector<double>> rows(workers, std::vector<double>(n));
  std::vector<ExpvStats> worker_stats(workers);
  std::vector<double> coords(n * d);
  std::vector<double> log_scale(d, 0.0);
  auto isd = g.inv_sqrt_degrees();
  std::vector<double> vhat(n);
  for (std::size_t i = 0; i < n; ++i) vhat[i] = g.sqrt_degrees()[i] / std::sqrt(g.total_volume());
  ExpvOptions opts{config.eta, config.max_krylov_dim};
  const double row_norm = std::sqrt(static_cast<double>(n) / static_cast<double>(d));

  parallel_for(d, workers, [&](std::size_t r, std::size_t w) {
    auto& u = rows[w];
    if (exact) {
      std::fill(u.begin(), u.end(), 0.0);
      u[r] = 1.0;
    } else {
      std::mt19937_64 rng(derive_seed(config.rng_seed, stream, r));
      std::normal_distribution<double> normal;
      double s = 0.0;
      for (auto& x : u) {
        x = normal(rng);
        s += x * x;
      }
      double f = row_norm / std::sqrt(s);
      for (auto& x : u) x *= f;
    }
    // exp(-A/2) fixes vhat, whose image is a constant vector that centring
    // removes anyway; dropping it keeps the decaying part from being swamped.
    double along = 0.0;
    for (std::size_t i = 0; i < n; ++i) along += vhat[i] * u[i];
    for (std::size_t i = 0; i < n; ++i) u[i] -= along * vhat[i];
    auto& buf = scratch[w];
    Matvec half_a = [&](std::span<const double> x, std::span<double> out) {
      acc.apply_normalized(scale, x, out, buf);
    };
    auto v = expv_scaled(half_a, u, opts, &worker_stats[w]);
    log_scale[r] = v.log_scale;
    double* col = coords.data() + r * n;
    for (std::size_t i = 0; i < n; ++i) col[i] = isd[i] * v.direction[i];
  });
  double top = *std::max_element(log_scale.begin(), log_scale.end());
  for (std::size_t r = 0; r < d; ++r) {
    double f = std::exp(log_scale[r] - top);
    double* col = coords.data() + r * n;
    for (std::size_t i = 0; i < n; ++i) col[i] *= f;
  }

  if (stats) {
    stats->rows = d;
    stats->exact = exact;
    for (const auto& s : worker_stats) {
      stats->matvecs += s.matvecs;
      stats->max_krylov_dim = std::max(stats->max_krylov_dim, s.max_krylov_dim);
    }
  }
  return Embedding::from_coordinates(g, d, std::move(coords), true);
}

}  // namespace balcut
