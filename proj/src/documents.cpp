#include "pursuit/documents.hpp"

#include <cmath>
#include <cstdio>

#include "pursuit/rng.hpp"

namespace pursuit {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string digest_hex(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return std::string("fnv1a64:") + buf;
}

Json manifest_json(const Manifest& m) {
  Json j;
  j["command"] = m.command;
  j["argv"] = m.argv;
  j["inputs"] = m.inputs;
  j["seed"] = m.seed;
  j["tool_version"] = kToolVersion;
  j["rng"] = Rng::kAlgorithm;
  if (m.wall_clock_seconds) j["wall_clock_seconds"] = *m.wall_clock_seconds;
  return j;
}

Manifest manifest_from_json(const Json& j) {
  Manifest m;
  m.command = j.at("command").get<std::string>();
  m.argv = j.at("argv").get<std::vector<std::string>>();
  m.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
  m.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("wall_clock_seconds")) m.wall_clock_seconds = j["wall_clock_seconds"].get<double>();
  return m;
}

Json make_document(const std::string& kind, const Manifest& m, Json result) {
  Json doc;
  doc["kind"] = kind;
  doc["manifest"] = manifest_json(m);
  doc["result"] = std::move(result);
  return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

namespace {

// JSON has no infinities.
Json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

Json state_json(const GameState& s) {
  Json j;
  j["phase"] = to_string(s.phase);
  j["cops"] = s.cops;
  j["robber"] = s.robber == kUnplaced ? Json(nullptr) : Json(s.robber);
  return j;
}

} // namespace

Json to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.size();
  j["directed"] = g.directed();
  j["edges"] = g.edge_list();
  return j;
}

Json to_json(const SolveResult& r) {
  Json j;
  j["cop_number"] = r.cop_count;
  j["speed"] = r.config.speed.to_string();
  j["directed"] = r.config.directed;
  j["cops_win"] = r.cops_win;
  j["placement"] = r.placement;
  j["capture_bound"] = r.capture_bound;
  j["states"] = r.states;
  j["has_strategy_table"] = static_cast<bool>(r.table);
  return j;
}

Json to_json(const TrimCertificate& c) {
  Json j;
  j["p"] = c.p;
  j["witness_cap"] = c.witness_cap;
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    Json st;
    st["kind"] = to_string(s.kind);
    if (s.kind == TrimKind::Degree) st["vertex"] = s.vertex;
    st["witness"] = s.witness;
    st["stationed"] = s.stationed;
    st["removed"] = s.removed;
    st["cops"] = s.cops;
    steps.push_back(std::move(st));
  }
  j["steps"] = std::move(steps);
  j["residual"] = c.residual;
  j["total_cops"] = c.total_cops;
  j["certified_cap"] = c.certified_cap;
  j["expansion_certified"] = c.expansion_certified;
  return j;
}

Json to_json(const Trace& t) {
  Json j;
  j["cops"] = t.config.cop_count;
  j["speed"] = t.config.speed.to_string();
  j["directed"] = t.config.directed;
  j["seed"] = t.seed;
  j["max_rounds"] = t.max_rounds;
  j["cop_controller"] = t.cop_controller;
  j["robber_controller"] = t.robber_controller;
  Json entries = Json::array();
  for (const auto& e : t.entries) {
    Json x;
    x["round"] = e.round;
    if (e.decision.robber == kUnplaced) x["cops_to"] = e.decision.cops;
    else x["robber_to"] = e.decision.robber;
    x["state"] = state_json(e.state);
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  j["outcome"] = to_string(t.outcome);
  j["capture_round"] = t.capture_round;
  j["diagnostic"] = t.diagnostic;
  j["robber_status"] = t.robber_status;
  return j;
}

Json to_json(const ReductionInstance& inst, const ReductionSolution& sol) {
  Json j;
  Json comps = Json::array();
  for (std::size_t c = 0; c < inst.cop_numbers.size(); ++c) {
    Json x;
    x["vertices"] = inst.condensation.parts[c];
    x["cop_number"] = inst.cop_numbers[c];
    x["sources"] = inst.source_sets[c];
    comps.push_back(std::move(x));
  }
  j["components"] = std::move(comps);
  j["dag_arcs"] = inst.condensation.dag.edge_list();
  j["source_components"] = inst.sources;
  j["x"] = sol.x;
  j["total"] = sol.total;
  return j;
}

Json to_json(const ExpansionParams& p) {
  Json j;
  j["regime"] = to_string(p.regime);
  j["log_n"] = p.log_n;
  if (p.regime == Regime::Fast) {
    j["R"] = p.R;
    j["alpha"] = p.alpha;
    j["d_sequence"] = p.d_sequence;
  }
  j["epsilon"] = p.epsilon;
  j["log_p"] = number(p.log_p);
  j["p"] = p.p;
  j["log_k"] = number(p.log_k);
  j["l"] = p.l;
  j["radii"] = p.radii;
  j["log_r_lo"] = number(p.log_r_lo);
  j["log_r_hi"] = number(p.log_r_hi);
  if (p.regime == Regime::Digraph) j["r"] = number(p.r);
  j["margin1"] = number(p.margin1);
  j["margin2"] = number(p.margin2);
  j["feasible"] = p.feasible;
  Json grid = Json::array();
  for (const auto& g : p.grid) grid.push_back({{"epsilon", g.epsilon}, {"margin1", number(g.margin1)}, {"margin2", number(g.margin2)}});
  j["grid"] = std::move(grid);
  return j;
}

Json to_json(const ValidatorReport& r) {
  Json j;
  j["property"] = r.property;
  Json mode;
  mode["kind"] = to_string(r.mode);
  if (r.mode == ValidationMode::Exhaustive) mode["cap"] = r.cap;
  else {
    mode["trials"] = r.trials;
    mode["seed"] = r.seed;
  }
  j["mode"] = std::move(mode);
  j["verdict"] = to_string(r.verdict);
  if (r.verdict == Verdict::Violated) {
    j["witness"] = r.witness;
    if (!r.witness_other.empty()) j["witness_other"] = r.witness_other;
  }
  Json params;
  for (const auto& [k, v] : r.params) params[k] = number(v);
  j["params"] = std::move(params);
  j["worst_ratio"] = number(r.worst_ratio);
  j["examined"] = r.examined;
  return j;
}

Json to_json(const BudgetReport& b) {
  Json j;
  j["controller"] = b.controller;
  j["p"] = b.p;
  j["k"] = number(b.k);
  j["l"] = b.l;
  j["radii"] = b.radii;
  j["declared"] = number(b.declared);
  j["actual"] = b.actual;
  j["group_sizes"] = b.group_sizes;
  j["verified_cap"] = b.verified_cap;
  j["trivial"] = b.trivial;
  return j;
}

} // namespace pursuit
