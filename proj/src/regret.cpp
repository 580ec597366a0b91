#include "balcut/regret.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "balcut/error.hpp"
#include "balcut/reference.hpp"

namespace balcut {

RegretReport mmw_regret_check(const std::vector<Eigen::MatrixXd>& losses, const Eigen::VectorXd& vhat,
                              double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) fail(ErrorCode::InvalidParams, "epsilon must lie in (0,1)");
  const auto n = vhat.size();
  if (n < 2) fail(ErrorCode::InvalidArgument, "need dimension at least 2");
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  RegretReport r;
  for (const auto& y : losses) {
    if (y.rows() != n || y.cols() != n) fail(ErrorCode::DimensionMismatch, "loss matrix size");
    // vhat is pushed far down so exp() keeps only the complement.
    double push = epsilon * sum.norm() + 1000.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(-epsilon * sum - push * vhat * vhat.transpose());
    double hi = es.eigenvalues().maxCoeff();
    Eigen::VectorXd w = (es.eigenvalues().array() - hi).exp();
    Eigen::MatrixXd ex = es.eigenvectors() * w.asDiagonal() * es.eigenvectors().transpose();
    double denom = ex.trace();
    r.gain += (ex.cwiseProduct(y)).sum() / denom;
    sum += y;
  }
  r.lambda_min = min_eigenvalue_on_complement(sum, vhat);
  r.bound = (1.0 - epsilon) * r.gain - std::log(static_cast<double>(n)) / epsilon;
  r.slack = r.lambda_min - r.bound;
  return r;
}

}  // namespace balcut
