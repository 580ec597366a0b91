#include "balcut/serialize.hpp"

#include "balcut/error.hpp"

#ifndef BALCUT_BUILD_ID
#define BALCUT_BUILD_ID "unknown"
#endif

namespace balcut {

using nlohmann::json;

namespace {

std::string_view case_name(OracleCase c) {
  switch (c) {
    case OracleCase::EdgeEnergy: return "edge_energy";
    case OracleCase::Roundable: return "roundable";
    case OracleCase::SweepCut: return "sweep_cut";
  }
  return "unknown";
}

json vertex_list(const VertexSet& s, const std::vector<std::size_t>* ids) {
  json arr = json::array();
  for (std::size_t v : s) arr.push_back(ids ? (*ids)[v] : v);
  return arr;
}

}  // namespace

std::string build_id() { return BALCUT_BUILD_ID; }

json to_json(const DualCoefficients& dual) {
  json beta = json::array();
  for (const auto& [v, w] : dual.beta) beta.push_back({{"vertex", v}, {"value", w}});
  return {{"alpha", dual.alpha}, {"beta", beta}};
}

json to_json(const Certificate& cert) {
  json j = to_json(cert.dual);
  j["gamma_certified"] = cert.gamma_certified;
  j["value"] = cert.value;
  return j;
}

json to_json(const RunConfig& c) {
  json j = {
      {"epsilon", c.epsilon},
      {"t_constant", c.t_constant},
      {"max_iterations", c.max_iterations ? json(*c.max_iterations) : json(nullptr)},
      {"sketch_delta", c.sketch.delta},
      {"jl_constant", c.sketch.jl_constant},
      {"eta", c.sketch.eta},
      {"sweep_constant", c.oracle.sweep_constant},
      {"edge_energy_factor", c.oracle.edge_energy_factor},
      {"trials", c.trials},
      {"c_balance", c.c_balance ? json(*c.c_balance) : json(nullptr)},
      {"paper_constants", c.paper_constants},
      {"engine", std::string(to_string(c.engine))},
      {"threads", c.threads},
  };
  return j;
}

json to_json(const TraceRecord& r) {
  return {{"t", r.t},
          {"case", std::string(case_name(r.kind))},
          {"edge_energy", r.edge_energy},
          {"mu_r", r.mu_r},
          {"r_spread", r.r_spread},
          {"cut_size", r.cut_size},
          {"cut_conductance", r.cut_conductance},
          {"union_mu", r.union_mu},
          {"dim", r.dim}};
}

json outcome_to_json(const PartitionOutcome& out, const RunConfig& config, const std::vector<std::size_t>* ids) {
  json j = {{"schema", "balcut.outcome"},
            {"version", kOutcomeSchemaVersion},
            {"build", build_id()},
            {"seed", config.seed},
            {"config", to_json(config)},
            {"b", out.b},
            {"gamma", out.gamma},
            {"engine", std::string(to_string(out.engine))},
            {"planned_iterations", out.planned_iterations},
            {"iterations", out.iterations}};
  if (out.is_cut()) {
    const auto& c = out.cut();
    j["outcome"] = "balanced_cut";
    j["cut"] = vertex_list(c.cut, ids);
    j["conductance"] = c.conductance;
    j["balance"] = c.balance;
    j["via"] = c.via == CutSource::Rounded ? "rounded" : "union";
  } else {
    const auto& cert = out.certificate();
    j["outcome"] = "certificate";
    json cj = to_json(cert);
    if (ids) {
      for (auto& e : cj["beta"]) e["vertex"] = (*ids)[e["vertex"].get<std::size_t>()];
    }
    j["certificate"] = cj;
    j["union"] = vertex_list(cert.union_set, ids);
  }
  return j;
}

json to_json(const Decomposition& dec, const std::vector<std::size_t>* ids) {
  json leaves = json::array();
  for (const auto& leaf : dec.leaves) {
    json verts = json::array();
    for (std::size_t v : leaf.vertices) verts.push_back(ids ? (*ids)[v] : v);
    json l = {{"vertices", verts}, {"depth", leaf.depth}};
    l["certificate"] = leaf.certificate ? to_json(*leaf.certificate) : json(nullptr);
    leaves.push_back(l);
  }
  return {{"schema", "balcut.decomposition"},
          {"version", kOutcomeSchemaVersion},
          {"build", build_id()},
          {"leaves", leaves},
          {"crossing_weight", dec.crossing_weight},
          {"crossing_fraction", dec.crossing_fraction},
          {"max_depth", dec.max_depth}};
}

Certificate certificate_from_json(const json& doc, std::size_t n) {
  const json& c = doc.contains("certificate") ? doc.at("certificate") : doc;
  Certificate cert;
  try {
    cert.dual.alpha = c.at("alpha").get<double>();
    for (const auto& e : c.at("beta")) {
      std::size_t v = e.at("vertex").get<std::size_t>();
      double w = e.at("value").get<double>();
      if (v >= n) fail(ErrorCode::DimensionMismatch, "certificate vertex " + std::to_string(v) + " >= n");
      cert.dual.beta.emplace_back(v, w);
    }
    cert.gamma_certified = c.at("gamma_certified").get<double>();
    cert.gamma = cert.gamma_certified * 16.0 / 3.0;
    cert.value = c.value("value", 0.0);
    std::vector<std::size_t> members;
    if (doc.contains("union")) members = doc.at("union").get<std::vector<std::size_t>>();
    for (auto v : members) {
      if (v >= n) fail(ErrorCode::DimensionMismatch, "union vertex out of range");
    }
    cert.union_set = VertexSet::from_indices(n, members);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("certificate JSON: ") + e.what());
  }
  std::sort(cert.dual.beta.begin(), cert.dual.beta.end());
  cert.dual.validate(n);
  return cert;
}

}  // namespace balcut
