#include "balcut/operators.hpp"

#include <algorithm>
#include <string>

#include "balcut/error.hpp"

namespace balcut {

namespace {

void check_sizes(const Graph& g, std::span<const double> x, std::span<double> out) {
  if (x.size() != g.num_vertices() || out.size() != g.num_vertices()) {
    fail(ErrorCode::DimensionMismatch, "operator input of size " + std::to_string(x.size()) +
                                           " for n = " + std::to_string(g.num_vertices()));
  }
}

double mu_dot(const Graph& g, std::span<const double> x) {
  auto mu = g.mu();
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += mu[i] * x[i];
  return s;
}

}  // namespace

double DualCoefficients::beta_sum() const {
  double s = 0.0;
  for (const auto& [v, w] : beta) s += w;
  return s;
}

std::vector<double> DualCoefficients::dense_beta(std::size_t n) const {
  std::vector<double> out(n, 0.0);
  for (const auto& [v, w] : beta) {
    if (v >= n) fail(ErrorCode::DimensionMismatch, "beta index " + std::to_string(v) + " >= n");
    out[v] += w;
  }
  return out;
}

void DualCoefficients::validate(std::size_t n) const {
  for (const auto& [v, w] : beta) {
    if (v >= n) fail(ErrorCode::DimensionMismatch, "beta index " + std::to_string(v) + " >= n");
    if (w < 0.0) fail(ErrorCode::NegativeBeta, "beta at vertex " + std::to_string(v) + " is negative");
  }
}

double dual_value(const DualCoefficients& dual, double b) {
  return dual.alpha - (1.0 - b) / b * dual.beta_sum();
}

void lkv_apply(const Graph& g, std::span<const double> x, std::span<double> out) {
  check_sizes(g, x, out);
  auto mu = g.mu();
  double s = mu_dot(g, x);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mu[i] * (x[i] - s);
}

void r_i_apply(const Graph& g, std::size_t i, std::span<const double> x, std::span<double> out) {
  check_sizes(g, x, out);
  if (i >= g.num_vertices()) fail(ErrorCode::DimensionMismatch, "R_i index out of range");
  auto mu = g.mu();
  double coef = x[i] - mu_dot(g, x);
  for (std::size_t j = 0; j < x.size(); ++j) out[j] = -coef * mu[j];
  out[i] += coef;
}

void weighted_r_apply(const Graph& g, std::span<const double> c, std::span<const double> x,
                      std::span<double> out) {
  check_sizes(g, x, out);
  if (c.size() != g.num_vertices()) fail(ErrorCode::DimensionMismatch, "R coefficient size");
  auto mu = g.mu();
  double s = mu_dot(g, x);
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = c[i] * (x[i] - s);
    total += out[i];
  }
  for (std::size_t i = 0; i < x.size(); ++i) out[i] -= mu[i] * total;
}

CertificateOperator::CertificateOperator(const Graph& g, const DualCoefficients& dual)
    : g_(&g), alpha_(dual.alpha), beta_(dual.dense_beta(g.num_vertices())) {
  dual.validate(g.num_vertices());
}

void CertificateOperator::apply(std::span<const double> x, std::span<double> out) const {
  const Graph& g = *g_;
  check_sizes(g, x, out);
  auto mu = g.mu();
  const double inv_vol = 1.0 / g.total_volume();
  double s = mu_dot(g, x);
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) total += beta_[i] * (x[i] - s);
  for (std::size_t i = 0; i < x.size(); ++i) {
    double lx = g.degree(i) * x[i];
    for (const auto& nb : g.neighbors(i)) lx -= nb.weight * x[nb.vertex];
    out[i] = inv_vol * lx + beta_[i] * (x[i] - s) - mu[i] * total - alpha_ * mu[i] * (x[i] - s);
  }
}

void CertificateOperator::apply_normalized(std::span<const double> x, std::span<double> out) const {
  const Graph& g = *g_;
  auto isd = g.inv_sqrt_degrees();
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = isd[i] * x[i];
  apply(y, out);
  const double vol = g.total_volume();
  for (std::size_t i = 0; i < x.size(); ++i) out[i] *= vol * isd[i];
}

UpdateAccumulator::UpdateAccumulator(const Graph& g) : g_(&g), b_(g.num_vertices(), 0.0) {}

void UpdateAccumulator::accumulate(const DualCoefficients& dual, double gamma) {
  dual.validate(g_->num_vertices());
  a_ += 1.0 / (6.0 * g_->total_volume());
  for (const auto& [v, w] : dual.beta) {
    if (w > 0.0 && b_[v] == 0.0) ++beta_support_;
    b_[v] += w / 6.0;
  }
  c_ += (gamma - dual.alpha) / 6.0;
  ++t_;
}

void UpdateAccumulator::apply(std::span<const double> x, std::span<double> out) const {
  const Graph& g = *g_;
  check_sizes(g, x, out);
  auto mu = g.mu();
  double s = mu_dot(g, x);
  double total = 0.0;
  if (beta_support_ > 0) {
    for (std::size_t i = 0; i < x.size(); ++i) total += b_[i] * (x[i] - s);
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    double lx = g.degree(i) * x[i];
    for (const auto& nb : g.neighbors(i)) lx -= nb.weight * x[nb.vertex];
    out[i] = a_ * lx + b_[i] * (x[i] - s) - mu[i] * total + c_ * mu[i] * (x[i] - s);
  }
}

void UpdateAccumulator::apply_normalized(double scale, std::span<const double> x,
                                         std::span<double> out, std::span<double> scratch) const {
  const Graph& g = *g_;
  check_sizes(g, x, out);
  if (scratch.size() != x.size()) fail(ErrorCode::DimensionMismatch, "scratch size");
  auto isd = g.inv_sqrt_degrees();
  auto mu = g.mu();
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    scratch[i] = isd[i] * x[i];
    s += mu[i] * scratch[i];
  }
  double total = 0.0;
  if (beta_support_ > 0) {
    for (std::size_t i = 0; i < x.size(); ++i) total += b_[i] * (scratch[i] - s);
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    double lx = g.degree(i) * scratch[i];
    for (const auto& nb : g.neighbors(i)) lx -= nb.weight * scratch[nb.vertex];
    const double centred = scratch[i] - s;
    out[i] = scale * isd[i] * (a_ * lx + b_[i] * centred - mu[i] * total + c_ * mu[i] * centred);
  }
}

}  // namespace balcut
