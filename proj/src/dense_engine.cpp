#include "balcut/dense_engine.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "balcut/error.hpp"

namespace balcut {

DenseExactEngine::DenseExactEngine(const Graph& g) : g_(&g) {
  const std::size_t n = g.num_vertices();
  if (n > kDenseLimit) {
    fail(ErrorCode::SizeLimit, "dense engine limited to n <= " + std::to_string(kDenseLimit));
  }
  vhat_.resize(static_cast<Eigen::Index>(n));
  const double s = std::sqrt(g.total_volume());
  for (std::size_t i = 0; i < n; ++i) vhat_[static_cast<Eigen::Index>(i)] = g.sqrt_degrees()[i] / s;
}

Embedding DenseExactEngine::from_spectrum(const Eigen::VectorXd& values,
                                          const Eigen::MatrixXd& vectors) const {
  const Graph& g = *g_;
  const std::size_t n = g.num_vertices();
  const double lo = values.minCoeff();
  // Columns with weight below 1e-12 of the largest change squared distances
  // by less than 1e-24 relative and are dropped.
  std::vector<Eigen::Index> keep;
  std::vector<double> weight;
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    double w = std::exp(-0.5 * (values[k] - lo));
    if (w >= 1e-12) {
      keep.push_back(k);
      weight.push_back(w);
    }
  }
  std::vector<double> coords(n * keep.size());
  auto isd = g.inv_sqrt_degrees();
  for (std::size_t c = 0; c < keep.size(); ++c) {
    double* col = coords.data() + c * n;
    for (std::size_t i = 0; i < n; ++i) {
      col[i] = isd[i] * vectors(static_cast<Eigen::Index>(i), keep[c]) * weight[c];
    }
  }
  return Embedding::from_coordinates(g, keep.size(), std::move(coords), true);
}

Embedding DenseExactEngine::embed(const UpdateAccumulator& acc, double epsilon) {
  const Graph& g = *g_;
  if (&acc.graph() != &g) fail(ErrorCode::DimensionMismatch, "accumulator belongs to another graph");
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  const double vol = g.total_volume();
  auto isd = g.inv_sqrt_degrees();

  if (!acc.has_beta()) {
    if (!have_laplacian_) {
      Eigen::MatrixXd lsym = Eigen::MatrixXd::Identity(n, n);
      for (const auto& e : g.edges()) {
        double v = -e.w * isd[e.u] * isd[e.v];
        lsym(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v)) = v;
        lsym(static_cast<Eigen::Index>(e.v), static_cast<Eigen::Index>(e.u)) = v;
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lsym);
      lap_values_ = es.eigenvalues();
      lap_vectors_ = es.eigenvectors();
      lap_proj_.resize(n);
      for (Eigen::Index k = 0; k < n; ++k) {
        double c = lap_vectors_.col(k).dot(vhat_);
        lap_proj_[k] = 1.0 - c * c;
      }
      have_laplacian_ = true;
    }
    // A = eps (2m a Lsym + c (I - v v^T))
    Eigen::VectorXd values =
        epsilon * (vol * acc.laplacian_coeff() * lap_values_ + acc.lkv_coeff() * lap_proj_);
    // The vhat direction maps to a constant vector; keep it out of the spectrum.
    values += 1e6 * (Eigen::VectorXd::Ones(n) - lap_proj_);
    return from_spectrum(values, lap_vectors_);
  }

  // N = D^{-1/2} H D^{-1/2}
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  const double a = acc.laplacian_coeff();
  for (Eigen::Index i = 0; i < n; ++i) h(i, i) = a * g.degree(static_cast<std::size_t>(i));
  for (const auto& e : g.edges()) {
    h(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v)) -= a * e.w;
    h(static_cast<Eigen::Index>(e.v), static_cast<Eigen::Index>(e.u)) -= a * e.w;
  }
  Eigen::Map<const Eigen::VectorXd> mu(g.mu().data(), n);
  Eigen::Map<const Eigen::VectorXd> b(acc.beta_coeffs().data(), n);
  // sum_i b_i (e_i - mu)(e_i - mu)^T + c (diag(mu) - mu mu^T)
  h.diagonal() += b + acc.lkv_coeff() * mu;
  h -= b * mu.transpose() + mu * b.transpose();
  h += (b.sum() - acc.lkv_coeff()) * mu * mu.transpose();
  Eigen::Map<const Eigen::VectorXd> isdv(isd.data(), n);
  Eigen::MatrixXd a_mat = (epsilon * vol) * (isdv.asDiagonal() * h * isdv.asDiagonal());
  a_mat += (a_mat.norm() + 1e6) * vhat_ * vhat_.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a_mat);
  return from_spectrum(es.eigenvalues(), es.eigenvectors());
}

}  // namespace balcut
