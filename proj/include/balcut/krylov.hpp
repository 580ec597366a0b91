#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace balcut {

using Matvec = std::function<void(std::span<const double>, std::span<double>)>;

struct ExpvOptions {
  double eta = 1e-12;
  std::size_t max_dim = 256;
};

struct ExpvStats {
  std::size_t matvecs = 0;
  std::size_t substeps = 0;
  std::size_t max_krylov_dim = 0;
};

// v ~ exp(-A) u for symmetric positive semidefinite A, with
// |v - exp(-A) u| <= eta |exp(-A)| |u| (a-posteriori Lanczos estimate).
// Long time spans are split into substeps when the Krylov dimension runs out.
std::vector<double> expv(const Matvec& a, std::span<const double> u, const ExpvOptions& options = {},
                         ExpvStats* stats = nullptr);

// Same, returned as exp(log_scale) * direction so large exponents do not underflow.
struct ScaledVector {
  std::vector<double> direction;
  double log_scale = 0.0;
};
ScaledVector expv_scaled(const Matvec& a, std::span<const double> u, const ExpvOptions& options = {},
                         ExpvStats* stats = nullptr);

struct EigenOptions {
  double tol = 1e-10;
  std::size_t max_dim = 400;
  std::uint64_t seed = 7;
};

// Smallest eigenvalue of symmetric A restricted to the orthogonal complement
// of the unit vector `deflate` (pass an empty span for the whole space).
double lanczos_min_eigenvalue(const Matvec& a, std::size_t n, std::span<const double> deflate,
                              const EigenOptions& options = {});

}  // namespace balcut
