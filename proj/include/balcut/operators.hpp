#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "balcut/graph.hpp"

namespace balcut {

// Dual variables (alpha, beta) of the balanced-separator program.
// beta is sparse, sorted by vertex, with non-negative entries.
struct DualCoefficients {
  double alpha = 0.0;
  std::vector<std::pair<std::size_t, double>> beta;

  double beta_sum() const;
  std::vector<double> dense_beta(std::size_t n) const;
  // Throws NegativeBeta / DimensionMismatch.
  void validate(std::size_t n) const;
};

// V(alpha, beta) = alpha - (1-b)/b * sum(beta)
double dual_value(const DualCoefficients& dual, double b);

// (L(K_V) x)_i = mu_i (x_i - mu^T x)
void lkv_apply(const Graph& g, std::span<const double> x, std::span<double> out);
// R_i x = (x_i - mu^T x)(e_i - mu)
void r_i_apply(const Graph& g, std::size_t i, std::span<const double> x, std::span<double> out);
// sum_i c_i R_i x, with c dense
void weighted_r_apply(const Graph& g, std::span<const double> c, std::span<const double> x,
                      std::span<double> out);

// M(alpha, beta) = L/2m + sum_i beta_i R_i - alpha L(K_V)
class CertificateOperator {
 public:
  CertificateOperator(const Graph& g, const DualCoefficients& dual);
  std::size_t size() const { return g_->num_vertices(); }
  void apply(std::span<const double> x, std::span<double> out) const;
  // 2m D^{-1/2} M D^{-1/2}, under which L(K_V) becomes the projector I - v v^T.
  void apply_normalized(std::span<const double> x, std::span<double> out) const;

 private:
  const Graph* g_;
  double alpha_;
  std::vector<double> beta_;
};

// H = a L + sum_i b_i R_i + c L(K_V), the running sum of the loss matrices
// P = (M(alpha, beta) + gamma L(K_V)) / 6.
class UpdateAccumulator {
 public:
  explicit UpdateAccumulator(const Graph& g);

  void accumulate(const DualCoefficients& dual, double gamma);

  const Graph& graph() const { return *g_; }
  double laplacian_coeff() const { return a_; }
  double lkv_coeff() const { return c_; }
  std::span<const double> beta_coeffs() const { return b_; }
  std::size_t steps() const { return t_; }
  bool has_beta() const { return beta_support_ > 0; }

  void apply(std::span<const double> x, std::span<double> out) const;
  // out = scale * D^{-1/2} H D^{-1/2} x. `scratch` must have size n.
  void apply_normalized(double scale, std::span<const double> x, std::span<double> out,
                        std::span<double> scratch) const;
 private:
  const Graph* g_;
  double a_ = 0.0;
  double c_ = 0.0;
  std::vector<double> b_;
  std::size_t t_ = 0;
  std::size_t beta_support_ = 0;
};

}  // namespace balcut
