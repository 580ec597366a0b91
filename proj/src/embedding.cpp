#include "balcut/embedding.hpp"

#include <cmath>
#include <string>

#include "balcut/error.hpp"

namespace balcut {

Embedding Embedding::from_coordinates(const Graph& g, std::size_t d, std::vector<double> coords,
                                      bool normalize) {
  const std::size_t n = g.num_vertices();
  if (coords.size() != n * d) {
    fail(ErrorCode::DimensionMismatch, "embedding has " + std::to_string(coords.size()) +
                                           " coordinates, expected " + std::to_string(n * d));
  }
  Embedding e;
  e.n_ = n;
  e.d_ = d;
  e.coords_ = std::move(coords);
  e.refresh(g);
  if (normalize) {
    if (!(e.variance_ >= 1e-300) || !std::isfinite(e.variance_)) {
      fail(ErrorCode::DegenerateEmbedding, "embedding spread is zero or not finite");
    }
    e.scale_ = 1.0 / std::sqrt(e.variance_);
    for (auto& x : e.coords_) x *= e.scale_;
    for (auto& x : e.mean_) x *= e.scale_;
    for (auto& x : e.radius_sq_) x *= e.scale_ * e.scale_;
    e.variance_ *= e.scale_ * e.scale_;
  }
  return e;
}

void Embedding::refresh(const Graph& g) {
  auto mu = g.mu();
  mean_.assign(d_, 0.0);
  radius_sq_.assign(n_, 0.0);
  for (std::size_t r = 0; r < d_; ++r) {
    const double* c = coords_.data() + r * n_;
    double m = 0.0;
    for (std::size_t i = 0; i < n_; ++i) m += mu[i] * c[i];
    mean_[r] = m;
    for (std::size_t i = 0; i < n_; ++i) {
      double x = c[i] - m;
      radius_sq_[i] += x * x;
    }
  }
  variance_ = 0.0;
  for (std::size_t i = 0; i < n_; ++i) variance_ += mu[i] * radius_sq_[i];
}

double Embedding::distance_sq(std::size_t i, std::size_t j) const {
  double s = 0.0;
  for (std::size_t r = 0; r < d_; ++r) {
    double x = coords_[r * n_ + i] - coords_[r * n_ + j];
    s += x * x;
  }
  return s;
}

std::vector<double> Embedding::vector_of(std::size_t i) const {
  std::vector<double> v(d_);
  for (std::size_t r = 0; r < d_; ++r) v[r] = coords_[r * n_ + i];
  return v;
}

}  // namespace balcut
