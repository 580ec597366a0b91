#include "balcut/driver.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "balcut/dense_engine.hpp"
#include "balcut/error.hpp"
#include "balcut/parallel.hpp"

namespace balcut {

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::Auto: return "auto";
    case Engine::Sketch: return "sketch";
    case Engine::Dense: return "dense";
  }
  return "auto";
}

Engine parse_engine(const std::string& name) {
  if (name == "auto") return Engine::Auto;
  if (name == "sketch") return Engine::Sketch;
  if (name == "dense") return Engine::Dense;
  fail(ErrorCode::InvalidArgument, "unknown engine '" + name + "'");
}

RunConfig RunConfig::practical() { return RunConfig{}; }

RunConfig RunConfig::paper() {
  RunConfig c;
  c.paper_constants = true;
  c.epsilon = 1.0 / 130.0;
  c.t_constant = 6.0 * 129.0 * 130.0;
  c.sketch = SketchConfig::paper();
  return c;
}

void RunConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) fail(ErrorCode::InvalidParams, "epsilon must lie in (0,1)");
  if (!(t_constant > 0.0)) fail(ErrorCode::InvalidParams, "t_constant must be positive");
  if (max_iterations && *max_iterations == 0) fail(ErrorCode::InvalidParams, "max_iterations must be positive");
  if (c_balance && !(*c_balance > 0.0 && *c_balance <= 0.5)) {
    fail(ErrorCode::InvalidParams, "c_balance must lie in (0, 1/2]");
  }
  if (!(oracle.sweep_constant > 0.0)) fail(ErrorCode::InvalidParams, "sweep constant must be positive");
  if (!(oracle.edge_energy_factor > 0.0)) fail(ErrorCode::InvalidParams, "edge energy factor must be positive");
  if (threads == 0) fail(ErrorCode::InvalidParams, "threads must be at least 1");
  sketch.validate();
}

std::size_t planned_iterations(std::size_t n, double gamma, const RunConfig& config) {
  double t = std::ceil(config.t_constant * std::log(std::max<double>(2.0, static_cast<double>(n))) / gamma);
  std::size_t planned = static_cast<std::size_t>(std::max(1.0, t));
  if (config.max_iterations) planned = std::min(planned, *config.max_iterations);
  return planned;
}

double effective_c_balance(double b, const RunConfig& config) {
  if (config.c_balance) return *config.c_balance;
  return config.paper_constants ? balance_constant(b) : b / 4.0;
}

PartitionOutcome balcut(const Graph& g, double b, double gamma, const RunConfig& config,
                        const IterationObserver& observer) {
  if (!(b > 0.0 && b <= 0.5)) fail(ErrorCode::InvalidParams, "b must lie in (0, 1/2]");
  if (!(gamma > 0.0 && gamma < 1.0)) fail(ErrorCode::InvalidParams, "gamma must lie in (0, 1)");
  config.validate();
  const std::size_t n = g.num_vertices();
  if (n < 2) fail(ErrorCode::InvalidGraph, "graph needs at least two vertices");

  PartitionOutcome out;
  out.b = b;
  out.gamma = gamma;
  out.planned_iterations = planned_iterations(n, gamma, config);
  out.engine = config.engine;
  if (out.engine == Engine::Auto) out.engine = n <= config.dense_threshold ? Engine::Dense : Engine::Sketch;

  SketchConfig sketch = config.sketch;
  sketch.epsilon = config.epsilon;
  sketch.rng_seed = derive_seed(config.seed, 0x736b6574ULL);
  sketch.threads = config.threads;
  RoundingConfig rounding;
  rounding.trials = config.trials;
  rounding.c_balance = effective_c_balance(b, config);
  rounding.seed = derive_seed(config.seed, 0x726f756eULL);
  rounding.threads = config.threads;

  std::unique_ptr<DenseExactEngine> dense;
  if (out.engine == Engine::Dense) dense = std::make_unique<DenseExactEngine>(g);

  UpdateAccumulator acc(g);
  std::vector<char> in_union(n, 0);
  double union_vol = 0.0;
  double alpha_sum = 0.0;
  std::vector<double> beta_sum(n, 0.0);
  const double total = g.total_volume();

  for (std::size_t t = 1; t <= out.planned_iterations; ++t) {
    Embedding emb = dense ? dense->embed(acc, config.epsilon) : sketch_embedding(g, acc, sketch, t);
    OracleResult res = run_oracle(emb, g, b, gamma, config.oracle);
    if (observer) observer(IterationView{t, emb, res, acc});

    TraceRecord rec;
    rec.t = t;
    rec.kind = res.kind;
    rec.edge_energy = res.edge_energy;
    rec.mu_r = res.mu_r;
    rec.r_spread = res.r_spread;
    rec.cut_size = res.cut.size();
    rec.cut_conductance = res.cut_conductance;
    rec.dim = emb.dim();
    out.iterations = t;

    if (res.kind == OracleCase::Roundable) {
      rec.union_mu = union_vol / total;
      out.trace.push_back(rec);
      RoundedCut rc = proj_round(emb, g, b, rounding);
      out.result = BalancedCut{std::move(rc.cut), rc.conductance, rc.balance, CutSource::Rounded, t};
      return out;
    }

    for (std::size_t v : res.cut) {
      if (!in_union[v]) {
        in_union[v] = 1;
        union_vol += g.degree(v);
      }
    }
    rec.union_mu = union_vol / total;
    out.trace.push_back(rec);
    alpha_sum += res.dual.alpha;
    for (const auto& [v, w] : res.dual.beta) beta_sum[v] += w;

    if (std::min(union_vol, total - union_vol) >= (b / 4.0) * total - 1e-12 * total) {
      VertexSet s = VertexSet::from_mask(in_union);
      double phi = conductance(g, s);
      double bal = balance(g, s);
      out.result = BalancedCut{std::move(s), phi, bal, CutSource::Union, t};
      return out;
    }
    acc.accumulate(res.dual, gamma);
  }

  const double inv_t = 1.0 / static_cast<double>(out.iterations);
  Certificate cert;
  cert.union_set = VertexSet::from_mask(in_union);
  cert.dual.alpha = alpha_sum * inv_t;
  for (std::size_t v = 0; v < n; ++v) {
    if (beta_sum[v] > 0.0) cert.dual.beta.emplace_back(v, beta_sum[v] * inv_t);
  }
  cert.gamma = gamma;
  cert.gamma_certified = 3.0 * gamma / 16.0;
  cert.value = dual_value(cert.dual, b);
  out.result = std::move(cert);
  return out;
}

CertificateReading certify_no_balanced_cut(const Graph& g, const Certificate& cert, double b) {
  if (cert.union_set.universe() != g.num_vertices()) fail(ErrorCode::DimensionMismatch, "certificate universe");
  double vol = volume(g, cert.union_set);
  double total = g.total_volume();
  if (std::min(vol, total - vol) >= (b / 4.0) * total - 1e-12 * total) {
    fail(ErrorCode::NotApplicable, "certificate set is b/4-balanced");
  }
  CertificateReading r;
  r.conductance_level = cert.gamma / 16.0;
  r.volume_ceiling = 2.0 * vol;
  r.balance_ceiling = 2.0 * vol / total;
  return r;
}

namespace {

struct Piece {
  std::vector<std::size_t> vertices;  // ids in the input graph
  std::vector<WeightedEdge> edges;    // local
  std::size_t depth;
};

void split_components(std::vector<std::size_t> ids, std::vector<WeightedEdge> edges, std::size_t depth,
                      std::vector<Piece>& stack) {
  auto labels = connected_components(ids.size(), edges);
  std::size_t count = ids.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<Piece> parts(count);
  std::vector<std::size_t> local(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto& p = parts[labels[i]];
    local[i] = p.vertices.size();
    p.vertices.push_back(ids[i]);
    p.depth = depth;
  }
  for (const auto& e : edges) parts[labels[e.u]].edges.push_back({local[e.u], local[e.v], e.w});
  for (auto& p : parts) stack.push_back(std::move(p));
}

}  // namespace

Decomposition decompose(const Graph& g, double b, double gamma, const RunConfig& config,
                        std::optional<std::size_t> max_depth) {
  const std::size_t n = g.num_vertices();
  const std::size_t depth_bound =
      max_depth ? *max_depth
                : 4 * static_cast<std::size_t>(std::ceil(std::log2(std::max<double>(2.0, static_cast<double>(n))))) + 4;
  Decomposition dec;
  std::vector<Piece> stack;
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  stack.push_back({all, std::vector<WeightedEdge>(g.edges().begin(), g.edges().end()), 0});
  std::vector<std::size_t> leaf_of(n, 0);

  while (!stack.empty()) {
    Piece piece = std::move(stack.back());
    stack.pop_back();
    dec.max_depth = std::max(dec.max_depth, piece.depth);
    if (piece.vertices.size() < 3) {
      dec.leaves.push_back({piece.vertices, piece.depth, std::nullopt});
      continue;
    }
    if (piece.depth > depth_bound) {
      fail(ErrorCode::RecursionDepthExceeded, "decomposition deeper than " + std::to_string(depth_bound));
    }
    Graph sub = Graph::from_edges(piece.vertices.size(), piece.edges);
    PartitionOutcome res = balcut(sub, b, gamma, config);
    if (!res.is_cut()) {
      dec.leaves.push_back({piece.vertices, piece.depth, res.certificate()});
      continue;
    }
    const VertexSet& side = res.cut().cut;
    for (int part = 0; part < 2; ++part) {
      bool want = part == 0;
      std::vector<std::size_t> ids, local_index(sub.num_vertices(), 0);
      for (std::size_t v = 0; v < sub.num_vertices(); ++v) {
        if (side.contains(v) == want) {
          local_index[v] = ids.size();
          ids.push_back(v);
        }
      }
      std::vector<WeightedEdge> edges;
      for (const auto& e : sub.edges()) {
        if (side.contains(e.u) == want && side.contains(e.v) == want) {
          edges.push_back({local_index[e.u], local_index[e.v], e.w});
        }
      }
      for (auto& id : ids) id = piece.vertices[id];
      split_components(std::move(ids), std::move(edges), piece.depth + 1, stack);
    }
  }
  for (std::size_t l = 0; l < dec.leaves.size(); ++l) {
    for (std::size_t v : dec.leaves[l].vertices) leaf_of[v] = l;
  }
  for (const auto& e : g.edges()) {
    if (leaf_of[e.u] != leaf_of[e.v]) dec.crossing_weight += e.w;
  }
  dec.crossing_fraction = dec.crossing_weight / g.total_weight();
  return dec;
}

}  // namespace balcut
