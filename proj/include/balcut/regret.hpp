#pragma once

#include <Eigen/Dense>
#include <vector>

namespace balcut {

struct RegretReport {
  double lambda_min = 0.0;  // of sum Y on the complement of vhat
  double gain = 0.0;        // sum_t Y_t . Z_t
  double bound = 0.0;       // (1 - eps) gain - ln n / eps
  double slack = 0.0;       // lambda_min - bound
};

// Matrix multiplicative weights: with Z_t = exp(-eps S_t) / (I . exp(-eps S_t)),
// S_t the sum of earlier losses and 0 <= Y_t <= I vanishing on vhat,
// sum Y_t >= ((1 - eps) sum Y_t . Z_t - ln n / eps) I on the complement of vhat.
RegretReport mmw_regret_check(const std::vector<Eigen::MatrixXd>& losses, const Eigen::VectorXd& vhat,
                              double epsilon);

}  // namespace balcut
