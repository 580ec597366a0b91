#pragma once

#include <cstddef>
#include <cstdint>

#include "balcut/embedding.hpp"
#include "balcut/operators.hpp"

namespace balcut {

struct SketchConfig {
  double delta = 0.25;
  double jl_constant = 4.0;
  double eta = 1e-12;
  double epsilon = 0.25;
  std::uint64_t rng_seed = 1;
  std::size_t threads = 1;
  std::size_t max_krylov_dim = 256;
  // When k_delta >= n, use the n unit vectors as sketch rows: an exact factor.
  bool exact_when_saturated = true;

  static SketchConfig paper();
  void validate() const;
};

// k_delta = ceil(jl_constant * ln n / delta^2)
std::size_t sketch_dimension(std::size_t n, const SketchConfig& config);

struct SketchStats {
  std::size_t rows = 0;
  std::size_t matvecs = 0;
  std::size_t max_krylov_dim = 0;
  bool exact = false;
};

// Approximate embedding of U_eps(H): vectors whose Gram matrix is
// proportional to D^{-1/2} exp(-A) D^{-1/2}, A = 2m eps D^{-1/2} H D^{-1/2},
// rescaled to unit spread. `stream` separates the random rows of different calls.
Embedding sketch_embedding(const Graph& g, const UpdateAccumulator& acc, const SketchConfig& config,
                           std::uint64_t stream = 0, SketchStats* stats = nullptr);

}  // namespace balcut
