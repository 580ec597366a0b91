#pragma once

#include <cstddef>
#include <vector>

#include "balcut/embedding.hpp"
#include "balcut/operators.hpp"

namespace balcut {

// Prefix cuts S_1, S_2, ... of a vertex order, with incremental statistics.
struct SweepTable {
  std::vector<std::size_t> order;
  std::vector<double> mu;           // mu(S_i), i = 1..size()
  std::vector<double> conductance;  // phi(S_i)

  std::size_t size() const { return mu.size(); }
  VertexSet prefix(std::size_t count, std::size_t universe) const;
};

// Vertices sorted by radius, largest first (ties by index). Holds the prefixes
// S_1..S_{z-1}, z being the first index with mu(S_z) >= b/8.
SweepTable radial_sweep(const Embedding& emb, const Graph& g, double b);

// All prefixes of `order` except the full set.
SweepTable sweep_prefixes(const Graph& g, std::vector<std::size_t> order, std::size_t limit);

enum class OracleCase { EdgeEnergy = 1, Roundable = 2, SweepCut = 3 };

struct OracleConfig {
  double sweep_constant = 2048.0;        // Case-3 cuts need phi <= sweep_constant * sqrt(gamma)
  // Case 1 when edge_energy >= edge_energy_factor * gamma. edge_energy is L.X / m,
  // so 4 means L.X / 2m >= 2 gamma.
  double edge_energy_factor = 4.0;
  double roundable_threshold = 1.0 / 64.0;
  double variance_tolerance = 1e-6;
};

struct OracleResult {
  OracleCase kind = OracleCase::EdgeEnergy;
  DualCoefficients dual;  // meaningful unless kind == Roundable
  VertexSet cut;          // B for Case 3, empty otherwise
  double edge_energy = 0.0;
  double mu_r = 0.0;      // mu(R), R = {r_i^2 <= 32(1-b)/b}
  double r_spread = 0.0;  // E over mu_R x mu_R of |v_i - v_j|^2
  double cut_conductance = 0.0;
  std::size_t sweep_size = 0;
};

OracleResult run_oracle(const Embedding& emb, const Graph& g, double b, double gamma,
                        const OracleConfig& config = {});

struct CheegerSweep {
  VertexSet cut;
  std::size_t h = 0;  // 1-based prefix length
  double conductance = 0.0;
  double bound = 0.0;
};

// For x >= 0 with mu(supp x) <= 1/2, sum d_i x_i^2 <= 1 and, in decreasing
// order of x, sum_{i >= k} d_i x_i^2 >= sigma: some prefix S_h with h >= k has
// phi(S_h) <= sqrt(2 x^T L x) / sigma. Returns the best such prefix.
CheegerSweep cheeger_sweep_bound(const Graph& g, std::span<const double> x, std::size_t k, double sigma);

}  // namespace balcut
