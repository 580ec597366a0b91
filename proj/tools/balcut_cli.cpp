#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "balcut/balcut.hpp"
#include "facts.hpp"

using namespace balcut;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitContract = 3;

struct GraphArgs {
  std::string path;
  std::string generate;
  std::string format = "edgelist";
  bool largest_component = false;
};

struct RunArgs {
  double b = 0.5;
  double gamma = 0.01;
  double epsilon = 0.0;
  double t_constant = 0.0;
  std::size_t max_iter = 0;
  double sketch_delta = 0.0;
  std::size_t trials = 0;
  double c_balance = 0.0;
  double sweep_constant = 0.0;
  bool paper_constants = false;
  std::string seed = "1";
  std::size_t threads = 1;
  std::string engine = "auto";
  bool trace = false;
};

struct OutArgs {
  std::string format = "json";
  std::string out;
};

void add_graph_flags(CLI::App* cmd, GraphArgs& g) {
  cmd->add_option("--graph", g.path, "graph file");
  cmd->add_option("--generate", g.generate, "generator spec, e.g. barbell:5,1");
  cmd->add_option("--input-format", g.format, "edgelist or metis")->check(CLI::IsMember({"edgelist", "metis"}));
  cmd->add_flag("--largest-component", g.largest_component, "keep only the largest connected component");
}

void add_run_flags(CLI::App* cmd, RunArgs& r) {
  cmd->add_option("--b", r.b, "balance parameter in (0, 1/2]");
  cmd->add_option("--gamma", r.gamma, "target conductance in (0, 1)");
  cmd->add_option("--epsilon", r.epsilon, "MMW step size");
  cmd->add_option("--t-constant", r.t_constant, "iterations = t_constant ln n / gamma");
  cmd->add_option("--max-iter", r.max_iter, "iteration cap");
  cmd->add_option("--sketch-delta", r.sketch_delta, "sketch distortion");
  cmd->add_option("--trials", r.trials, "rounding trials (0: 4 log2 n)");
  cmd->add_option("--c-balance", r.c_balance, "rounding volume window");
  cmd->add_option("--sweep-constant", r.sweep_constant, "Case-3 conductance budget factor");
  cmd->add_flag("--paper-constants", r.paper_constants, "use the constants from the analysis");
  cmd->add_option("--seed", r.seed, "integer seed or 'random'");
  cmd->add_option("--threads", r.threads, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--engine", r.engine, "auto, sketch or dense")->check(CLI::IsMember({"auto", "sketch", "dense"}));
  cmd->add_flag("--trace", r.trace, "per-iteration JSON lines on stderr");
}

void add_out_flags(CLI::App* cmd, OutArgs& o) {
  cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", o.out, "output file (default stdout)");
}

std::uint64_t parse_seed(const std::string& s) {
  if (s == "random") return std::random_device{}() * 0x100000001b3ULL ^ std::random_device{}();
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidArgument, "seed must be an integer or 'random'");
  }
}

RunConfig make_config(const RunArgs& a) {
  RunConfig c = a.paper_constants ? RunConfig::paper() : RunConfig::practical();
  if (a.epsilon > 0.0) c.epsilon = a.epsilon;
  if (a.t_constant > 0.0) c.t_constant = a.t_constant;
  if (a.max_iter > 0) c.max_iterations = a.max_iter;
  if (a.sketch_delta > 0.0) c.sketch.delta = a.sketch_delta;
  if (a.c_balance > 0.0) c.c_balance = a.c_balance;
  if (a.sweep_constant > 0.0) c.oracle.sweep_constant = a.sweep_constant;
  c.trials = a.trials;
  c.seed = parse_seed(a.seed);
  c.threads = a.threads;
  c.engine = parse_engine(a.engine);
  c.validate();
  return c;
}

LoadedGraph obtain_graph(const GraphArgs& a, std::uint64_t seed) {
  if (a.path.empty() == a.generate.empty()) fail(ErrorCode::InvalidArgument, "give exactly one of --graph or --generate");
  if (!a.path.empty()) return load_graph(a.path, parse_graph_format(a.format), a.largest_component);
  auto gen = generate(a.generate, seed);
  LoadedGraph lg{std::move(gen.graph), {}};
  lg.original_ids.resize(lg.graph.num_vertices());
  std::iota(lg.original_ids.begin(), lg.original_ids.end(), 0);
  return lg;
}

void emit(const OutArgs& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream f(o.out);
  if (!f) fail(ErrorCode::Io, "cannot write " + o.out);
  f << text << '\n';
}

void log_line(const json& j) { std::cerr << j.dump() << '\n'; }

int cmd_partition(const GraphArgs& ga, const RunArgs& ra, const OutArgs& oa) {
  RunConfig cfg = make_config(ra);
  LoadedGraph lg = obtain_graph(ga, cfg.seed);
  IterationObserver obs;
  if (ra.trace) {
    obs = [](const IterationView& v) {
      log_line({{"t", v.t}, {"case", static_cast<int>(v.oracle.kind)}, {"edge_energy", v.oracle.edge_energy},
                {"cut_size", v.oracle.cut.size()}});
    };
  }
  auto out = balcut::balcut(lg.graph, ra.b, ra.gamma, cfg, obs);
  json doc = outcome_to_json(out, cfg, &lg.original_ids);
  if (oa.format == "json") {
    emit(oa, doc.dump(2));
  } else {
    std::ostringstream s;
    s << "outcome " << doc["outcome"].get<std::string>() << "\n";
    s << "n " << lg.graph.num_vertices() << " m " << lg.graph.num_edges() << "\n";
    s << "iterations " << out.iterations << " / " << out.planned_iterations << "\n";
    if (out.is_cut()) {
      s << "conductance " << out.cut().conductance << "\nbalance " << out.cut().balance << "\nsize "
        << out.cut().cut.size();
    } else {
      const auto& c = out.certificate();
      s << "alpha " << c.dual.alpha << "\nvalue " << c.value << "\ngamma_certified " << c.gamma_certified
        << "\nunion_size " << c.union_set.size();
    }
    emit(oa, s.str());
  }
  return kExitOk;
}

int cmd_certify(const GraphArgs& ga, const std::string& cert_path, double b, const OutArgs& oa) {
  LoadedGraph lg = obtain_graph(ga, 1);
  std::ifstream f(cert_path);
  if (!f) fail(ErrorCode::Io, "cannot open " + cert_path);
  json doc;
  try {
    doc = json::parse(f);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("certificate JSON: ") + e.what());
  }
  if (doc.contains("b") && b <= 0.0) b = doc["b"].get<double>();
  if (b <= 0.0) b = 0.5;
  Certificate cert = certificate_from_json(doc, lg.graph.num_vertices());
  auto fe = verify_dual_feasibility(lg.graph, cert.dual, b, cert.gamma_certified);
  json j = {{"schema", "balcut.verification"},
            {"version", kOutcomeSchemaVersion},
            {"build", build_id()},
            {"feasible", fe.feasible},
            {"value_ok", fe.value_ok},
            {"psd_ok", fe.psd_ok},
            {"value", fe.value},
            {"lambda_min", fe.lambda_min},
            {"method", fe.method},
            {"level", cert.gamma_certified}};
  if (!fe.violated.empty()) j["violated"] = fe.violated;
  try {
    auto r = certify_no_balanced_cut(lg.graph, cert, b);
    j["conductance_level"] = r.conductance_level;
    j["volume_ceiling"] = r.volume_ceiling;
    j["balance_ceiling"] = r.balance_ceiling;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotApplicable) throw;
    j["reading"] = "not applicable";
  }
  emit(oa, oa.format == "json" ? j.dump(2) : std::string(fe.feasible ? "feasible" : "infeasible"));
  return fe.feasible ? kExitOk : kExitContract;
}

int cmd_decompose(const GraphArgs& ga, const RunArgs& ra, const OutArgs& oa) {
  RunConfig cfg = make_config(ra);
  LoadedGraph lg = obtain_graph(ga, cfg.seed);
  auto dec = decompose(lg.graph, ra.b, ra.gamma, cfg);
  json doc = to_json(dec, &lg.original_ids);
  doc["config"] = to_json(cfg);
  doc["seed"] = cfg.seed;
  if (oa.format == "json") {
    emit(oa, doc.dump(2));
  } else {
    std::ostringstream s;
    s << "leaves " << dec.leaves.size() << "\ncrossing_fraction " << dec.crossing_fraction << "\nmax_depth "
      << dec.max_depth;
    emit(oa, s.str());
  }
  return kExitOk;
}

int cmd_gen(const std::string& spec, std::uint64_t seed, const std::string& out, const std::string& planted_out) {
  auto gen = generate(spec, seed);
  std::ostringstream s;
  write_edge_list(gen.graph, s);
  if (out.empty()) {
    std::cout << s.str();
  } else {
    std::ofstream f(out);
    if (!f) fail(ErrorCode::Io, "cannot write " + out);
    f << s.str();
  }
  if (!planted_out.empty()) {
    json sides = json::array();
    for (const auto& p : gen.planted) {
      json side = json::array();
      for (auto v : p) side.push_back(v);
      sides.push_back(side);
    }
    std::ofstream f(planted_out);
    if (!f) fail(ErrorCode::Io, "cannot write " + planted_out);
    f << json{{"name", gen.name}, {"planted", sides}}.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_selftest(std::size_t instances, std::uint64_t seed) {
  bool ok = true;
  auto report = [&](const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS " : "FAIL ") << name << "  " << detail << '\n';
    ok = ok && pass;
  };
  auto suite = testsupport::run_fact_suite(instances, seed);
  for (const auto* t : suite.required()) {
    std::ostringstream d;
    d << t->checks << " checks, worst " << t->worst;
    report("fact " + t->name, t->failures == 0, d.str());
  }

  testsupport::Rng rng(seed);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = testsupport::pick(rng, 2, 100);
    Eigen::MatrixXd r = testsupport::random_vectors(n, n, rng);
    Eigen::MatrixXd a = r * r.transpose() / static_cast<double>(n) * testsupport::uniform(rng, 0.1, 40.0);
    Eigen::VectorXd u = testsupport::random_vectors(n, 1, rng).col(0);
    Eigen::VectorXd want = testsupport::symmetric_expm(-a) * u;
    Matvec op = [&a](std::span<const double> x, std::span<double> y) {
      Eigen::Map<Eigen::VectorXd>(y.data(), a.rows()) = a * testsupport::to_eigen(x);
    };
    auto got = expv(op, testsupport::to_std(u));
    worst = std::max(worst, (testsupport::to_eigen(got) - want).norm() / want.norm());
  }
  report("expv vs dense", worst <= 1e-9, "worst relative error " + std::to_string(worst));

  auto g = random_regular(40, 3, seed).graph;
  UpdateAccumulator acc(g);
  SketchConfig sc;
  sc.exact_when_saturated = false;
  auto emb = sketch_embedding(g, acc, sc, 1);
  Eigen::MatrixXd u = dense_u_epsilon(g, acc, sc.epsilon);
  std::size_t bad = 0, total = 0;
  for (std::size_t i = 0; i < 40; ++i)
    for (std::size_t j = i + 1; j < 40; ++j) {
      double exact = u(i, i) + u(j, j) - 2.0 * u(i, j);
      double approx = emb.distance_sq(i, j);
      ++total;
      if (std::abs(approx - exact) > sc.delta * exact) ++bad;
    }
  report("sketch distances", bad <= total / 20,
         std::to_string(bad) + " of " + std::to_string(total) + " pairs outside 1 +- delta");

  double min_slack = 1e300;
  for (int k = 0; k < 10; ++k) {
    const std::size_t n = testsupport::pick(rng, 2, 16);
    Eigen::VectorXd vhat = testsupport::random_vectors(n, 1, rng).col(0).cwiseAbs().normalized();
    Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n) - vhat * vhat.transpose();
    std::vector<Eigen::MatrixXd> ys;
    for (int t = 0; t < 20; ++t) {
      Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(testsupport::random_vectors(n, n, rng)).householderQ();
      Eigen::VectorXd lam = (Eigen::VectorXd::Random(n).array() + 1.0) / 2.0;
      ys.push_back(p * q * lam.asDiagonal() * q.transpose() * p);
    }
    min_slack = std::min(min_slack, mmw_regret_check(ys, vhat, 1.0 / 130.0).slack);
  }
  report("mmw regret", min_slack >= -1e-8, "min slack " + std::to_string(min_slack));
  return ok ? kExitOk : kExitContract;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::size_t degree, const RunArgs& ra, std::size_t repeat,
              const std::string& out) {
  RunConfig cfg = make_config(ra);
  if (!cfg.max_iterations) cfg.max_iterations = 3;
  if (ra.engine == "auto") cfg.engine = Engine::Sketch;
  std::ostringstream s;
  s << "n,m,gamma,iterations,wall_ms\n";
  for (std::size_t n : sizes) {
    auto g = random_regular(n, degree, cfg.seed).graph;
    double best = 1e300;
    std::size_t iters = 0;
    for (std::size_t r = 0; r < std::max<std::size_t>(1, repeat); ++r) {
      auto t0 = std::chrono::steady_clock::now();
      auto o = balcut::balcut(g, ra.b, ra.gamma, cfg);
      auto t1 = std::chrono::steady_clock::now();
      best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
      iters = o.iterations;
    }
    s << n << ',' << g.num_edges() << ',' << ra.gamma << ',' << iters << ',' << best << '\n';
  }
  if (out.empty()) {
    std::cout << s.str();
  } else {
    std::ofstream f(out);
    if (!f) fail(ErrorCode::Io, "cannot write " + out);
    f << s.str();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balanced separator by spectral primal-dual search"};
  app.require_subcommand(1);
  app.set_version_flag("--version", build_id());

  GraphArgs ga;
  RunArgs ra;
  OutArgs oa;

  auto* partition = app.add_subcommand("partition", "find a balanced cut or a certificate");
  add_graph_flags(partition, ga);
  add_run_flags(partition, ra);
  add_out_flags(partition, oa);

  std::string cert_path;
  double cert_b = 0.0;
  auto* certify = app.add_subcommand("certify", "verify a certificate against a graph");
  add_graph_flags(certify, ga);
  certify->add_option("--certificate", cert_path, "certificate or outcome JSON")->required();
  certify->add_option("--b", cert_b, "balance parameter (default: taken from the document)");
  add_out_flags(certify, oa);

  auto* decomp = app.add_subcommand("decompose", "recursive balanced separation");
  add_graph_flags(decomp, ga);
  add_run_flags(decomp, ra);
  add_out_flags(decomp, oa);

  std::string gen_spec, gen_out, gen_planted, gen_seed = "1";
  auto* gen = app.add_subcommand("gen", "write a generated graph as an edge list");
  gen->add_option("spec", gen_spec, "generator spec, e.g. random-regular:1024,3")->required();
  gen->add_option("--seed", gen_seed, "integer seed or 'random'");
  gen->add_option("--out", gen_out, "output file (default stdout)");
  gen->add_option("--planted-out", gen_planted, "write planted sides as JSON");

  std::size_t st_instances = 200;
  std::string st_seed = "1";
  auto* selftest = app.add_subcommand("selftest", "identity checks, expv, sketch and regret");
  selftest->add_option("--instances", st_instances, "random fact instances");
  selftest->add_option("--seed", st_seed, "integer seed");

  std::vector<std::size_t> bench_sizes{1024, 2048, 4096};
  std::size_t bench_degree = 3, bench_repeat = 1;
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "CSV timings on random regular graphs");
  bench->add_option("--sizes", bench_sizes, "vertex counts")->delimiter(',');
  bench->add_option("--degree", bench_degree, "degree");
  bench->add_option("--repeat", bench_repeat, "runs per size, minimum reported");
  bench->add_option("--out", bench_out, "output file (default stdout)");
  add_run_flags(bench, ra);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*partition) return cmd_partition(ga, ra, oa);
    if (*certify) return cmd_certify(ga, cert_path, cert_b, oa);
    if (*decomp) return cmd_decompose(ga, ra, oa);
    if (*gen) return cmd_gen(gen_spec, parse_seed(gen_seed), gen_out, gen_planted);
    if (*selftest) return cmd_selftest(st_instances, parse_seed(st_seed));
    if (*bench) return cmd_bench(bench_sizes, bench_degree, ra, bench_repeat, bench_out);
  } catch (const Error& e) {
    log_line({{"error", std::string(to_string(e.code()))}, {"message", e.what()}});
    return is_input_error(e.code()) ? kExitInput : kExitContract;
  } catch (const std::exception& e) {
    log_line({{"error", "internal"}, {"message", e.what()}});
    return kExitContract;
  }
  return kExitContract;
}
