#pragma once

// Dense and exhaustive oracles for small instances.

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <vector>

#include "balcut/embedding.hpp"
#include "balcut/operators.hpp"

namespace balcut {

inline constexpr std::size_t kBruteForceLimit = 22;

Eigen::VectorXd dense_vhat(const Graph& g);          // D^{1/2} 1 / sqrt(2m)
Eigen::MatrixXd dense_laplacian(const Graph& g);
Eigen::MatrixXd dense_lkv(const Graph& g);           // L(K_V)
Eigen::MatrixXd dense_lks(const Graph& g, const VertexSet& s);
Eigen::MatrixXd dense_r_i(const Graph& g, std::size_t i);
Eigen::MatrixXd dense_certificate(const Graph& g, const DualCoefficients& dual);
Eigen::MatrixXd dense_accumulator(const UpdateAccumulator& acc);
Eigen::MatrixXd gram_matrix(const Embedding& emb);

// exp(A) for symmetric A via eigendecomposition.
Eigen::MatrixXd dense_expm(const Eigen::MatrixXd& a);

// U_eps(H) = 2m D^{-1/2} exp(-A) D^{-1/2} / (I . exp(-A)), A = 2m eps D^{-1/2} H D^{-1/2},
// up to a multiple of the all-ones matrix.
Eigen::MatrixXd dense_u_epsilon(const Graph& g, const UpdateAccumulator& acc, double epsilon);

// Smallest eigenvalue of symmetric A on the orthogonal complement of unit u.
double min_eigenvalue_on_complement(const Eigen::MatrixXd& a, const Eigen::VectorXd& u);

struct BruteForceCut {
  VertexSet cut;  // never contains vertex n-1
  double conductance = 0.0;
  double mu = 0.0;
};

using CutPredicate = std::function<bool(double mu_of_side)>;

// Least-conductance cut among those accepted by the predicate, over all
// 2^{n-1} - 1 cuts (Gray-code order). Ties go to the smaller bitmask.
std::optional<BruteForceCut> brute_min_conductance(const Graph& g, const CutPredicate& accept);

// Every accepted cut with conductance <= phi_max.
std::vector<BruteForceCut> brute_enumerate(const Graph& g, const CutPredicate& accept, double phi_max);

CutPredicate b_balanced(double b);

}  // namespace balcut
