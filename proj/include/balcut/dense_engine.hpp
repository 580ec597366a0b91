#pragma once

#include <Eigen/Dense>
#include <cstddef>

#include "balcut/embedding.hpp"
#include "balcut/operators.hpp"

namespace balcut {

inline constexpr std::size_t kDenseLimit = 512;

// Exact embedding of U_eps(H) by dense eigendecomposition, for small graphs.
// While H has no R_i terms it is a combination of the normalised Laplacian and
// the projector I - v v^T, which commute, so one cached eigenbasis serves
// every such step.
class DenseExactEngine {
 public:
  explicit DenseExactEngine(const Graph& g);

  Embedding embed(const UpdateAccumulator& acc, double epsilon);

 private:
  Embedding from_spectrum(const Eigen::VectorXd& values, const Eigen::MatrixXd& vectors) const;

  const Graph* g_;
  Eigen::VectorXd vhat_;
  bool have_laplacian_ = false;
  Eigen::VectorXd lap_values_;
  Eigen::MatrixXd lap_vectors_;
  Eigen::VectorXd lap_proj_;  // eigenvalue of I - v v^T on each Laplacian eigenvector
};

}  // namespace balcut
