#include "balcut/sdp.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "balcut/dense_engine.hpp"
#include "balcut/error.hpp"
#include "balcut/krylov.hpp"

namespace balcut {

double edge_energy(const Embedding& emb, const Graph& g) {
  if (emb.num_vertices() != g.num_vertices()) fail(ErrorCode::DimensionMismatch, "embedding size");
  double total = 0.0;
  for (std::size_t r = 0; r < emb.dim(); ++r) {
    auto c = emb.coordinate(r);
    for (const auto& e : g.edges()) {
      double x = c[e.u] - c[e.v];
      total += e.w * x * x;
    }
  }
  return total / g.total_weight();
}

PsdpEvaluation evaluate_psdp(const Embedding& emb, const Graph& g, double b, double gamma) {
  if (!(b > 0.0 && b <= 0.5)) fail(ErrorCode::InvalidParams, "b must lie in (0, 1/2]");
  if (!(gamma > 0.0)) fail(ErrorCode::InvalidParams, "gamma must be positive");
  PsdpEvaluation ev;
  ev.edge_energy = edge_energy(emb, g);
  ev.variance = emb.variance();
  auto r2 = emb.radius_sq();
  ev.max_radius_sq = r2.empty() ? 0.0 : *std::max_element(r2.begin(), r2.end());
  constexpr double tol = 1e-9;
  ev.feasible = ev.edge_energy <= 4.0 * gamma + tol && std::abs(ev.variance - 1.0) <= tol &&
                ev.max_radius_sq <= (1.0 - b) / b + tol;
  return ev;
}

Embedding cut_to_embedding(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.num_vertices()) fail(ErrorCode::DimensionMismatch, "cut universe");
  if (s.empty() || s.is_full()) fail(ErrorCode::EmptyOrFullCut, "cut side must be a proper subset");
  double mu_s = mu_of(g, s);
  bool flip = mu_s > 0.5;
  double mt = flip ? 1.0 - mu_s : mu_s;
  double inside = std::sqrt((1.0 - mt) / mt);
  double outside = -std::sqrt(mt / (1.0 - mt));
  std::vector<double> coords(g.num_vertices());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    coords[i] = (s.contains(i) != flip) ? inside : outside;
  }
  return Embedding::from_coordinates(g, 1, std::move(coords), false);
}

DualFeasibility verify_dual_feasibility(const Graph& g, const DualCoefficients& dual, double b,
                                        double gamma, double tol) {
  if (!(b > 0.0 && b <= 0.5)) fail(ErrorCode::InvalidParams, "b must lie in (0, 1/2]");
  if (!(gamma > 0.0)) fail(ErrorCode::InvalidParams, "gamma must be positive");
  dual.validate(g.num_vertices());
  DualFeasibility out;
  out.value = dual_value(dual, b);
  out.value_ok = out.value > 4.0 * gamma;

  const std::size_t n = g.num_vertices();
  std::vector<double> vhat(n);
  for (std::size_t i = 0; i < n; ++i) vhat[i] = g.sqrt_degrees()[i] / std::sqrt(g.total_volume());
  CertificateOperator op(g, dual);
  double norm_est = 1.0;
  if (n <= kDenseLimit) {
    out.method = "dense";
    const auto nn = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd mat(nn, nn);
    std::vector<double> col(n), e(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      e[j] = 1.0;
      op.apply_normalized(e, col);
      e[j] = 0.0;
      for (std::size_t i = 0; i < n; ++i) mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = col[i];
    }
    mat = 0.5 * (mat + mat.transpose()).eval();
    Eigen::Map<const Eigen::VectorXd> v(vhat.data(), nn);
    Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(nn, nn) - v * v.transpose();
    Eigen::MatrixXd restricted = proj * mat * proj;
    double kappa = mat.norm() + 1.0;
    restricted += kappa * v * v.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(restricted, Eigen::EigenvaluesOnly);
    out.lambda_min = es.eigenvalues()[0];
    norm_est = std::max(1.0, std::abs(out.lambda_min));
    for (Eigen::Index k = 0; k < nn; ++k) {
      if (es.eigenvalues()[k] < kappa * 0.5) norm_est = std::max(norm_est, std::abs(es.eigenvalues()[k]));
    }
  } else {
    out.method = "lanczos";
    Matvec mv = [&](std::span<const double> x, std::span<double> y) { op.apply_normalized(x, y); };
    out.lambda_min = lanczos_min_eigenvalue(mv, n, vhat);
    Matvec neg = [&](std::span<const double> x, std::span<double> y) {
      op.apply_normalized(x, y);
      for (auto& t : y) t = -t;
    };
    norm_est = std::max({1.0, std::abs(out.lambda_min), std::abs(lanczos_min_eigenvalue(neg, n, vhat))});
  }
  out.tolerance = tol * norm_est;
  out.psd_ok = out.lambda_min >= -out.tolerance;
  out.feasible = out.value_ok && out.psd_ok;
  if (!out.value_ok) out.violated = "value";
  else if (!out.psd_ok) out.violated = "psd";
  return out;
}

}  // namespace balcut
