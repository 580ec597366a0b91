#pragma once

#include <string>

#include "balcut/embedding.hpp"
#include "balcut/operators.hpp"

namespace balcut {

// E_{ij in E} |v_i - v_j|^2 with edges weighted by w_ij / m.
double edge_energy(const Embedding& emb, const Graph& g);

struct PsdpEvaluation {
  double edge_energy = 0.0;
  double variance = 0.0;
  double max_radius_sq = 0.0;
  bool feasible = false;
};

// Feasibility for psdp(G, b, gamma): energy <= 4 gamma, unit spread,
// every r_i^2 <= (1-b)/b. Tolerance 1e-9 on each constraint.
PsdpEvaluation evaluate_psdp(const Embedding& emb, const Graph& g, double b, double gamma);

// One-dimensional embedding of a cut: sqrt(mu(T')/mu(T)) on T and
// -sqrt(mu(T)/mu(T')) off it, where T is the side of smaller volume.
Embedding cut_to_embedding(const Graph& g, const VertexSet& s);

struct DualFeasibility {
  bool feasible = false;
  bool value_ok = false;
  bool psd_ok = false;
  double value = 0.0;
  double lambda_min = 0.0;
  double tolerance = 0.0;
  std::string method;
  std::string violated;
};

// Checks V(alpha, beta) > 4 gamma and M(alpha, beta) >= 0 on the complement
// of D^{1/2} 1, after normalising so L(K_V) becomes the identity there.
// Dense eigendecomposition up to n = 512, Lanczos beyond.
DualFeasibility verify_dual_feasibility(const Graph& g, const DualCoefficients& dual, double b,
                                        double gamma, double tol = 1e-8);

}  // namespace balcut
