#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "balcut/expsketch.hpp"
#include "balcut/oracle.hpp"
#include "balcut/rounding.hpp"

namespace balcut {

enum class Engine { Auto, Sketch, Dense };

std::string_view to_string(Engine e);
Engine parse_engine(const std::string& name);

struct RunConfig {
  double epsilon = 0.25;
  double t_constant = 20.0;
  std::optional<std::size_t> max_iterations;
  SketchConfig sketch;
  OracleConfig oracle;
  std::size_t trials = 0;               // 0: ceil(4 log2 n)
  std::optional<double> c_balance;      // default b/4, or balance_constant(b) when paper_constants is set
  bool paper_constants = false;
  Engine engine = Engine::Auto;
  std::size_t dense_threshold = 256;    // Auto picks the dense engine up to this n
  std::uint64_t seed = 1;
  std::size_t threads = 1;

  static RunConfig practical();
  static RunConfig paper();
  void validate() const;
};

// T = ceil(t_constant ln n / gamma), capped by max_iterations.
std::size_t planned_iterations(std::size_t n, double gamma, const RunConfig& config);
double effective_c_balance(double b, const RunConfig& config);

enum class CutSource { Rounded, Union };

struct BalancedCut {
  VertexSet cut;
  double conductance = 0.0;
  double balance = 0.0;
  CutSource via = CutSource::Rounded;
  std::size_t iteration = 0;
};

struct Certificate {
  VertexSet union_set;           // union of the Case-3 cuts
  DualCoefficients dual;         // averaged over all iterations
  double gamma = 0.0;            // input gamma
  double gamma_certified = 0.0;  // 3 gamma / 16
  double value = 0.0;            // V(dual)
};

struct TraceRecord {
  std::size_t t = 0;
  OracleCase kind = OracleCase::EdgeEnergy;
  double edge_energy = 0.0;
  double mu_r = 0.0;
  double r_spread = 0.0;
  std::size_t cut_size = 0;
  double cut_conductance = 0.0;
  double union_mu = 0.0;
  std::size_t dim = 0;
};

struct PartitionOutcome {
  std::variant<BalancedCut, Certificate> result;
  double b = 0.0;
  double gamma = 0.0;
  std::size_t planned_iterations = 0;
  std::size_t iterations = 0;
  Engine engine = Engine::Sketch;
  std::vector<TraceRecord> trace;

  bool is_cut() const { return std::holds_alternative<BalancedCut>(result); }
  const BalancedCut& cut() const { return std::get<BalancedCut>(result); }
  const Certificate& certificate() const { return std::get<Certificate>(result); }
};

struct IterationView {
  std::size_t t;
  const Embedding& embedding;
  const OracleResult& oracle;
  const UpdateAccumulator& accumulator;  // state the embedding was built from
};

using IterationObserver = std::function<void(const IterationView&)>;

PartitionOutcome balcut(const Graph& g, double b, double gamma, const RunConfig& config = {},
                        const IterationObserver& observer = {});

struct CertificateReading {
  double conductance_level = 0.0;  // gamma / 16
  double volume_ceiling = 0.0;     // 2 vol(S)
  double balance_ceiling = 0.0;    // 2 mu(S)
};

// Any cut T with vol(T) <= vol(G)/2 and phi(T) <= gamma/16 has vol(T) <= 2 vol(S).
// Throws NotApplicable when S is itself b/4-balanced.
CertificateReading certify_no_balanced_cut(const Graph& g, const Certificate& cert, double b);

struct DecompositionLeaf {
  std::vector<std::size_t> vertices;  // ids in the input graph
  std::size_t depth = 0;
  std::optional<Certificate> certificate;  // absent for leaves too small to run on
};

struct Decomposition {
  std::vector<DecompositionLeaf> leaves;
  double crossing_weight = 0.0;
  double crossing_fraction = 0.0;  // crossing weight / total weight
  std::size_t max_depth = 0;
};

// Recursive balanced separation. Sides of each balanced cut are split into
// connected components and recursed on; certificates become leaves.
Decomposition decompose(const Graph& g, double b, double gamma, const RunConfig& config = {},
                        std::optional<std::size_t> max_depth = std::nullopt);

}  // namespace balcut
