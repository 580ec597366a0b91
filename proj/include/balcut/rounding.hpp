#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "balcut/embedding.hpp"

namespace balcut {

struct RoundingConfig {
  std::size_t trials = 0;            // 0: ceil(4 log2 n)
  std::optional<double> c_balance;   // default: balance_constant(b)
  std::uint64_t seed = 1;
  std::size_t threads = 1;
};

// Balance guaranteed by random projection of a roundable embedding:
// sigma = 4 sqrt(2) sqrt((1-b)/b), rho = 1/(1536 sigma^2), returns rho/32.
double balance_constant(double b);

std::size_t default_trials(std::size_t n);

struct RoundedCut {
  VertexSet cut;
  double conductance = 0.0;
  double balance = 0.0;  // min(mu(S), 1 - mu(S))
  std::size_t trial = 0;
};

// Projects onto random directions and sweeps; among prefixes with volume in
// [c 2m, (1-c) 2m] keeps the least conductance, ties broken by the sorted
// vertex list. Running more trials with the same seed never does worse.
RoundedCut proj_round(const Embedding& emb, const Graph& g, double b, const RoundingConfig& config = {});

}  // namespace balcut
