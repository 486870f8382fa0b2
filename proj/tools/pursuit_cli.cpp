// pursuit: command-line front end. Documents go to -o files, summaries to stdout.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pursuit/controllers.hpp"
#include "pursuit/documents.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/evaders.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/hall.hpp"
#include "pursuit/sprinkle.hpp"

using namespace pursuit;

namespace {

enum Exit { kOk = 0, kUsage = 2, kParse = 3, kResource = 4, kInfeasible = 5, kAbort = 6 };

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty() || text == "-") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InvalidArgument("bad integer '" + item + "' in list");
    out.push_back(v);
  }
  return out;
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream s;
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? "," : "") << xs[i];
  return xs.empty() ? "-" : s.str();
}

// Everything a subcommand needs besides its own flags.
struct Run {
  std::string command;
  std::vector<std::string> argv;
  std::string output;
  bool record_time = false;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();
  Manifest manifest;

  Graph load(const std::string& path) {
    std::string bytes = slurp(path);
    manifest.inputs[path] = digest_hex(bytes);
    std::istringstream in(bytes);
    return read_graph(in);
  }

  void emit(const std::string& kind, Json result) {
    manifest.command = command;
    manifest.argv = argv;
    if (record_time)
      manifest.wall_clock_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (output.empty()) return;
    std::ofstream out(output, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write '" + output + "'");
    out << dump(make_document(kind, manifest, std::move(result)));
  }
};

// argv minus the output path and timing flag: what a manifest replays.
std::vector<std::string> reproducible_args(const std::vector<std::string>& args) {
  std::vector<std::string> keep;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "-o" || a == "--output") {
      ++i;
      continue;
    }
    if (a.rfind("--output=", 0) == 0 || a == "--record-time") continue;
    keep.push_back(a);
  }
  return keep;
}

int run(const std::vector<std::string>& args);

struct SolveFlags {
  std::string graph;
  std::string speed = "1";
  bool directed = false;
  int max_cops = 0;
  int cops = 0;
  std::uint64_t budget = 0;
};

int cmd_solve(Run& run, const SolveFlags& f) {
  Graph g = run.load(f.graph);
  if (f.directed != g.directed()) throw InvalidArgument("--directed does not match the file header");
  Speed speed = Speed::parse(f.speed);
  SolverOptions opt{f.budget};
  SolveResult r;
  if (f.cops > 0) {
    r = cops_win(g, f.cops, speed, opt);
  } else if (f.max_cops > 0 && weak_components(g).size() == 1) {
    for (int c = 1; c <= f.max_cops; ++c) {
      r = cops_win(g, c, speed, opt);
      if (r.cops_win) break;
    }
  } else {
    r = cop_number(g, speed, opt);
  }
  if (r.cops_win)
    std::cout << (f.cops > 0 ? "cops win with " : "cop number ") << r.cop_count << "\nplacement "
              << join(r.placement) << "\ncapture bound " << r.capture_bound << "\n";
  else
    std::cout << "robber wins against " << r.cop_count << " cops\n";
  std::cout << "states " << r.states << "\n";
  run.emit("solve", to_json(r));
  return kOk;
}

struct TrimFlags {
  std::string graph;
  double p = 0.5;
  int witness_cap = -1;
};

int cmd_trim(Run& run, const TrimFlags& f) {
  Graph g = run.load(f.graph);
  if (!(f.p > 0 && f.p <= 1)) throw InvalidArgument("--p must lie in (0, 1]");
  TrimCertificate c = trim(g, f.p, f.witness_cap < 0 ? full_witness_cap(g.size()) : f.witness_cap);
  std::string check = check_trim(g, c);
  std::cout << "steps " << c.steps.size() << "\ncops " << c.total_cops << "\nresidual " << c.residual.size()
            << " vertices\nexpansion " << (c.expansion_certified ? "certified" : "up to cap " + std::to_string(c.certified_cap))
            << "\ncheck " << (check.empty() ? "ok" : check) << "\n";
  Json j = to_json(c);
  j["check"] = check.empty() ? "ok" : check;
  run.emit("trim", std::move(j));
  return check.empty() ? kOk : kAbort;
}

struct PlayFlags {
  std::string graph;
  std::string cops = "greedy";
  std::string robber = "random";
  int count = 0;
  std::string speed = "1";
  std::uint64_t seed = 0;
  int rounds = 1000;
  std::uint64_t budget = 0;
  // expansion controllers
  double logn = 0;
  int R = 2;
  std::optional<double> p, k;
  std::optional<int> l;
  std::string radii, placement;
  int n_global = 0;
  int verify_cap = 2;
  // evaders
  double c = 1.0 / 3;
  std::optional<double> np, s0;
};

std::unique_ptr<CopController> make_cops(const Graph& g, const PlayFlags& f, Speed speed, Json& extra) {
  const std::string& name = f.cops;
  if (name == "greedy" || name == "random" || name == "optimal") {
    int count = f.count;
    if (name == "optimal") {
      SolverOptions opt{f.budget};
      SolveResult r = count > 0 ? cops_win(g, count, speed, opt) : cop_number(g, speed, opt);
      if (!r.table) throw InvalidArgument("optimal cops need a weakly connected graph");
      extra["solver"] = to_json(r);
      return std::make_unique<OptimalCops>(std::move(r));
    }
    if (count < 1) throw InvalidArgument("--count is required for " + name + " cops");
    if (name == "greedy") return std::make_unique<GreedyCops>(count);
    return std::make_unique<RandomCops>(count);
  }
  if (name == "deployment") {
    auto inst = std::make_shared<ReductionInstance>(build_instance(g));
    auto sol = solve_covering(*inst);
    extra["reduction"] = to_json(*inst, sol);
    struct Owning : CopController {
      std::shared_ptr<ReductionInstance> inst;
      std::unique_ptr<CopController> inner;
      std::string name() const override { return inner->name(); }
      int cop_count() const override { return inner->cop_count(); }
      void reset(std::uint64_t s) override { inner->reset(s); }
      std::vector<Vertex> decide(const Graph& g, const GameState& s, const GameConfig& c, int r) override {
        return inner->decide(g, s, c, r);
      }
    };
    auto o = std::make_unique<Owning>();
    o->inst = inst;
    o->inner = deployment_controller(g, *inst, sol);
    return o;
  }
  if (name == "general" || name == "fast" || name == "digraph") {
    ControllerSetup setup;
    setup.seed = f.seed;
    setup.n_global = f.n_global;
    setup.verify_cap = f.verify_cap;
    if (f.p || f.k || f.l || !f.radii.empty() || !f.placement.empty()) {
      ControllerOverride o;
      if (f.p) o.p = *f.p;
      if (f.k) o.k = *f.k;
      if (f.l) o.l = *f.l;
      o.radii = parse_list(f.radii);
      if (!f.placement.empty()) {
        auto v = parse_list(f.placement);
        std::sort(v.begin(), v.end());
        o.placement = v;
      }
      setup.override_params = o;
    } else {
      double L = f.logn > 0 ? f.logn : std::log(static_cast<double>(std::max(g.size(), 2)));
      setup.params = name == "general" ? solve_params_general(L)
                     : name == "fast"  ? solve_params_fast(L, f.R)
                                       : solve_params_digraph(L);
    }
    BudgetReport report;
    std::unique_ptr<CopController> cops;
    if (name == "general") cops = general_cop_controller(g, setup, &report);
    else if (name == "fast") cops = fast_cop_controller(g, f.R, setup, &report);
    else cops = digraph_cop_controller(g, setup, &report);
    extra["budget"] = to_json(report);
    std::cout << "budget declared " << report.declared << " actual " << report.actual << "\n";
    return cops;
  }
  throw InvalidArgument("unknown cop controller '" + name + "'");
}

std::unique_ptr<RobberController> make_robber(const Graph& g, const PlayFlags& f, const GameConfig& cfg) {
  const std::string& name = f.robber;
  if (name == "random") return std::make_unique<RandomRobber>();
  if (name == "stationary") return std::make_unique<StationaryRobber>();
  if (name == "infinite-evader") return std::make_unique<InfiniteEvader>();
  if (name == "finite-evader") {
    const int n = g.size();
    double np = f.np ? *f.np : 2.0 * g.edge_count() / std::max(n, 1);
    double s0 = f.s0 ? *f.s0 : 3.0 * n / np * std::log(static_cast<double>(n));
    return std::make_unique<FiniteEvader>(f.c, np, s0);
  }
  if (name == "optimal") return std::make_unique<OptimalRobber>(solve_game(g, cfg, SolverOptions{f.budget}));
  throw InvalidArgument("unknown robber controller '" + name + "'");
}

int cmd_play(Run& run, const PlayFlags& f) {
  Graph g = run.load(f.graph);
  run.manifest.seed = f.seed;
  Speed speed = Speed::parse(f.speed);
  Json extra = Json::object();
  auto cops = make_cops(g, f, speed, extra);
  GameConfig cfg{cops->cop_count(), speed, g.directed()};
  auto robber = make_robber(g, f, cfg);
  Trace t = play(g, cfg, *cops, *robber, f.rounds, f.seed);
  std::cout << to_string(t.outcome);
  if (t.outcome == Outcome::Captured) std::cout << " in round " << t.capture_round;
  std::cout << "\ncops " << cfg.cop_count << " (" << t.cop_controller << ") robber " << t.robber_controller
            << " status " << t.robber_status << "\n";
  if (!t.diagnostic.empty()) std::cout << "diagnostic: " << t.diagnostic << "\n";
  Json j = to_json(t);
  j["legal"] = replay(g, t);
  for (auto& [k, v] : extra.items()) j[k] = v;
  run.emit("play", std::move(j));
  return t.outcome == Outcome::Aborted ? kAbort : kOk;
}

// Builds a staged controller without playing and reports its cop budget.
int cmd_controller(Run& run, const PlayFlags& f) {
  if (f.cops != "general" && f.cops != "fast" && f.cops != "digraph")
    throw InvalidArgument("controller takes general, fast or digraph, not '" + f.cops + "'");
  Graph g = run.load(f.graph);
  run.manifest.seed = f.seed;
  Json extra = Json::object();
  auto cops = make_cops(g, f, Speed::finite(f.cops == "fast" ? f.R : 1), extra);
  Json j = extra["budget"];
  j["cop_count"] = cops->cop_count();
  run.emit("controller", std::move(j));
  return kOk;
}

int cmd_reduce(Run& run, const std::string& path, std::uint64_t budget) {
  Graph g = run.load(path);
  if (!g.directed()) throw InvalidArgument("reduce needs a directed graph");
  SolverOptions opt{budget};
  ComponentSolver solver = [&](const Graph& h) { return cop_number(h, Speed::finite(1), opt); };
  Json parts = Json::array();
  int total = 0;
  for (const auto& part : weak_components(g)) {
    Subgraph sub = induced(g, part);
    ReductionInstance inst = build_instance(sub.graph, solver);
    ReductionSolution sol = solve_covering(inst);
    Json j = to_json(inst, sol);
    j["vertices"] = sub.to_parent;
    parts.push_back(std::move(j));
    total += sol.total;
    std::cout << "part of " << part.size() << " vertices: " << inst.cop_numbers.size() << " strong components, "
              << inst.sources.size() << " sources, x = " << join(sol.x) << "\n";
  }
  std::cout << "total " << total << "\n";
  run.emit("reduce", Json{{"parts", std::move(parts)}, {"total", total}});
  return kOk;
}

int cmd_generate(Run& run, const std::string& family, int n, double p, std::uint64_t seed) {
  run.manifest.seed = seed;
  Graph g;
  if (family == "subdivided-kn") g = subdivide_complete(n);
  else if (family == "gnp") g = gnp(n, p, seed);
  else if (family == "digraph") g = random_digraph(n, p, seed);
  else throw InvalidArgument("unknown family '" + family + "'");
  std::string text = to_text(g);
  std::cout << "vertices " << g.size() << "\nedges " << g.edge_count() << "\ndigest " << digest_hex(text) << "\n";
  run.manifest.command = run.command;
  run.manifest.argv = run.argv;
  if (run.output.empty()) return kOk;
  std::ofstream out(run.output, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + run.output + "'");
  // the manifest rides along as a comment line, which the reader skips
  out << "# manifest " << manifest_json(run.manifest).dump() << "\n" << text;
  return kOk;
}

struct ValidateFlags {
  std::string graph, property, mode = "sampled";
  int cap = 3, trials = 10000;
  std::uint64_t seed = 0;
  std::optional<double> np, s_max, bound, size, bound_per_vertex, s0, lo, hi, min_edges;
  double factor = 6, gamma = 0.25;
};

int cmd_validate(Run& run, const ValidateFlags& f) {
  Graph g = run.load(f.graph);
  run.manifest.seed = f.seed;
  const int n = g.size();
  const double m = static_cast<double>(g.edge_count());
  const double p_hat = n > 1 ? 2 * m / (static_cast<double>(n) * (n - 1)) : 0;
  const double np = f.np ? *f.np : p_hat * n;
  ValidationOptions opt{parse_mode(f.mode), f.cap, f.trials, f.seed};
  auto s0 = [&] {
    if (f.s0) return static_cast<int>(std::ceil(*f.s0));
    if (p_hat <= 0) throw InvalidArgument("--s0 is required when the graph has no edges");
    return static_cast<int>(std::ceil(3 / p_hat * std::log(static_cast<double>(n))));
  };
  ValidatorReport r;
  const std::string& prop = f.property;
  if (prop == "subset-avg-degree")
    r = validate_subset_avg_degree(g, static_cast<int>(f.s_max.value_or(0.6 * n)), f.bound.value_or(0.9 * np), opt);
  else if (prop == "cover")
    r = validate_cover(g, static_cast<int>(std::ceil(f.size.value_or(1))), f.bound_per_vertex.value_or(4 * np), opt);
  else if (prop == "pair-connect") r = validate_pair_connect(g, s0(), opt);
  else if (prop == "span-few") r = validate_span_few(g, s0(), f.factor, opt);
  else if (prop == "degree-spread") r = validate_degree_spread(g, f.gamma, np, opt);
  else if (prop == "degree-range") r = validate_degree_range(g, f.lo.value_or(0.9 * np), f.hi.value_or(1.1 * np));
  else if (prop == "edge-count") r = validate_edge_count(g, f.min_edges.value_or(99.0 * n));
  else throw InvalidArgument("unknown property '" + prop + "'");
  std::cout << r.property << " " << to_string(r.verdict) << " (" << to_string(r.mode) << ", examined " << r.examined
            << ", worst ratio " << r.worst_ratio << ")\n";
  if (r.verdict == Verdict::Violated) {
    std::cout << "witness " << join(r.witness) << "\n";
    if (!r.witness_other.empty()) std::cout << "other " << join(r.witness_other) << "\n";
  }
  Json j = to_json(r);
  if (r.verdict == Verdict::Violated) j["witness_rechecked"] = recheck_witness(g, r);
  run.emit("validate", std::move(j));
  return kOk;
}

int cmd_params(Run& run, const std::string& regime, double logn, int R) {
  if (!(logn > 0)) throw InvalidArgument("--logn must be positive");
  Regime rg = parse_regime(regime);
  ExpansionParams p = rg == Regime::General ? solve_params_general(logn)
                      : rg == Regime::Fast  ? solve_params_fast(logn, R)
                                            : solve_params_digraph(logn);
  std::cout << to_string(p.regime) << " L=" << logn << (p.feasible ? " feasible" : " infeasible") << "\n";
  if (p.feasible) {
    std::cout << "epsilon " << p.epsilon << "\nlog p " << p.log_p << "\nl " << p.l << "\nmargins " << p.margin1 << " "
              << p.margin2 << "\n";
    if (rg == Regime::Fast) std::cout << "d " << join(p.d_sequence) << "\n";
  }
  run.emit("params", to_json(p));
  return p.feasible ? kOk : kInfeasible;
}

int cmd_route(Run& run, const std::string& path, const std::string& cops, const std::string& targets, int r) {
  Graph g = run.load(path);
  VertexSet c = parse_list(cops), t = parse_list(targets);
  std::sort(c.begin(), c.end());
  std::sort(t.begin(), t.end());
  for (Vertex v : c)
    if (v < 0 || v >= g.size()) throw InvalidArgument("cop vertex out of range");
  for (Vertex v : t)
    if (v < 0 || v >= g.size()) throw InvalidArgument("target vertex out of range");
  Route route = hall_route(g, c, t, r);
  Json j;
  j["radius"] = r;
  j["ok"] = route.ok();
  if (route.ok()) {
    for (auto [target, cop] : route.assignment) std::cout << "target " << target << " <- cop " << cop << "\n";
    j["assignment"] = route.assignment;
  } else {
    std::cout << "no routing; deficient targets " << join(route.deficient) << "\n";
    j["deficient"] = route.deficient;
  }
  run.emit("route", std::move(j));
  return kOk;
}

// Rebuilds a trace from a play document and re-checks every decision.
int cmd_replay(Run& run, const std::string& graph_path, const std::string& doc_path) {
  Graph g = run.load(graph_path);
  Json doc = Json::parse(slurp(doc_path));
  const Json& r = doc.at("result");
  Trace t;
  t.config = GameConfig{r.at("cops").get<int>(), Speed::parse(r.at("speed").get<std::string>()), r.at("directed").get<bool>()};
  for (const auto& e : r.at("entries")) {
    TraceEntry x;
    x.round = e.at("round").get<int>();
    if (e.contains("cops_to")) x.decision = Decision::cop(e["cops_to"].get<std::vector<Vertex>>());
    else x.decision = Decision::rob(e.at("robber_to").get<Vertex>());
    const Json& s = e.at("state");
    x.state.phase = parse_phase(s.at("phase").get<std::string>());
    x.state.cops = s.at("cops").get<std::vector<Vertex>>();
    x.state.robber = s.at("robber").is_null() ? kUnplaced : s["robber"].get<Vertex>();
    t.entries.push_back(std::move(x));
  }
  bool ok = replay(g, t);
  std::cout << (ok ? "trace is legal" : "trace is NOT legal") << " (" << t.entries.size() << " decisions)\n";
  run.emit("replay", Json{{"legal", ok}, {"decisions", t.entries.size()}});
  return ok ? kOk : kAbort;
}

int cmd_rerun(const std::string& doc_path, const std::string& output) {
  std::string text = slurp(doc_path);
  Manifest m;
  if (text.rfind("# manifest ", 0) == 0) m = manifest_from_json(Json::parse(text.substr(11, text.find('\n') - 11)));
  else m = manifest_from_json(Json::parse(text).at("manifest"));
  for (const auto& [path, digest] : m.inputs)
    if (digest_hex(slurp(path)) != digest) throw InvalidArgument("input '" + path + "' changed since the run");
  std::vector<std::string> args = m.argv;
  if (!output.empty()) {
    args.push_back("-o");
    args.push_back(output);
  }
  return run(args);
}

int run(const std::vector<std::string>& args) {
  CLI::App app{"pursuit: cops and robbers engine"};
  app.require_subcommand(1);
  Run ctx;
  ctx.argv = reproducible_args(args);
  auto common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", ctx.output, "document path");
    sub->add_flag("--record-time", ctx.record_time, "store wall-clock time in the manifest");
  };

  SolveFlags sf;
  auto* solve = app.add_subcommand("solve", "exact cop number");
  solve->add_option("graph", sf.graph)->required();
  solve->add_option("--speed", sf.speed, "robber speed: positive integer or inf");
  solve->add_flag("--directed", sf.directed);
  solve->add_option("--max-cops", sf.max_cops)->check(CLI::NonNegativeNumber);
  solve->add_option("--cops", sf.cops, "decide this many cops only")->check(CLI::NonNegativeNumber);
  solve->add_option("--budget", sf.budget, "state budget");
  common(solve);

  TrimFlags tf;
  auto* trim_cmd = app.add_subcommand("trim", "degree/expansion decomposition");
  trim_cmd->add_option("graph", tf.graph)->required();
  trim_cmd->add_option("--p", tf.p);
  trim_cmd->add_option("--witness-cap", tf.witness_cap);
  common(trim_cmd);

  PlayFlags pf;
  // options shared by play and controller
  auto staged_options = [](CLI::App* sub, PlayFlags& f) {
    sub->add_option("--logn", f.logn);
    sub->add_option("--R", f.R);
    sub->add_option("--p", f.p);
    sub->add_option("--k", f.k);
    sub->add_option("--l", f.l);
    sub->add_option("--radii", f.radii);
    sub->add_option("--placement", f.placement);
    sub->add_option("--n-global", f.n_global);
    sub->add_option("--verify-cap", f.verify_cap);
  };

  auto* play_cmd = app.add_subcommand("play", "arena playout");
  play_cmd->add_option("graph", pf.graph)->required();
  play_cmd->add_option("--cops", pf.cops, "optimal|general|fast|digraph|deployment|greedy|random");
  play_cmd->add_option("--robber", pf.robber, "optimal|infinite-evader|finite-evader|stationary|random");
  play_cmd->add_option("--count", pf.count);
  play_cmd->add_option("--speed", pf.speed);
  play_cmd->add_option("--seed", pf.seed);
  play_cmd->add_option("--rounds", pf.rounds)->check(CLI::NonNegativeNumber);
  play_cmd->add_option("--budget", pf.budget);
  staged_options(play_cmd, pf);
  play_cmd->add_option("--c", pf.c);
  play_cmd->add_option("--np", pf.np);
  play_cmd->add_option("--s0", pf.s0);
  common(play_cmd);

  std::string reduce_graph;
  PlayFlags cf;
  cf.cops = "general";
  auto* controller = app.add_subcommand("controller", "build a staged controller and report its budget");
  controller->add_option("graph", cf.graph)->required();
  controller->add_option("--cops", cf.cops, "general|fast|digraph");
  controller->add_option("--seed", cf.seed);
  staged_options(controller, cf);
  common(controller);

  std::uint64_t reduce_budget = 0;
  auto* reduce = app.add_subcommand("reduce", "digraph cop number through sources");
  reduce->add_option("graph", reduce_graph)->required();
  reduce->add_option("--budget", reduce_budget);
  common(reduce);

  std::string family;
  int gen_n = 0;
  double gen_p = 0;
  std::uint64_t gen_seed = 0;
  auto* generate = app.add_subcommand("generate", "graph families");
  generate->add_option("--family", family, "subdivided-kn|gnp|digraph")->required();
  generate->add_option("--n", gen_n)->required();
  generate->add_option("--p", gen_p);
  generate->add_option("--seed", gen_seed);
  common(generate);

  ValidateFlags vf;
  auto* validate = app.add_subcommand("validate", "random-graph properties");
  validate->add_option("graph", vf.graph)->required();
  validate->add_option("--property", vf.property)->required();
  validate->add_option("--mode", vf.mode);
  validate->add_option("--cap", vf.cap);
  validate->add_option("--trials", vf.trials);
  validate->add_option("--seed", vf.seed);
  validate->add_option("--np", vf.np);
  validate->add_option("--s-max", vf.s_max);
  validate->add_option("--bound", vf.bound);
  validate->add_option("--size", vf.size);
  validate->add_option("--bound-per-vertex", vf.bound_per_vertex);
  validate->add_option("--s0", vf.s0);
  validate->add_option("--factor", vf.factor);
  validate->add_option("--gamma", vf.gamma);
  validate->add_option("--lo", vf.lo);
  validate->add_option("--hi", vf.hi);
  validate->add_option("--min-edges", vf.min_edges);
  common(validate);

  std::string regime = "general";
  double logn = 0;
  int param_R = 2;
  auto* params = app.add_subcommand("params", "expansion parameters for log n");
  params->add_option("--regime", regime, "general|digraph|fast");
  params->add_option("--logn", logn)->required();
  params->add_option("--R", param_R);
  common(params);

  std::string route_graph, route_cops, route_targets;
  int route_r = 1;
  auto* route = app.add_subcommand("route", "assign cops to targets within radius r");
  route->add_option("graph", route_graph)->required();
  route->add_option("--cops", route_cops)->required();
  route->add_option("--targets", route_targets)->required();
  route->add_option("--r", route_r);
  common(route);

  std::string replay_graph, replay_doc;
  auto* replay_cmd = app.add_subcommand("replay", "re-check a play document");
  replay_cmd->add_option("graph", replay_graph)->required();
  replay_cmd->add_option("trace", replay_doc)->required();
  common(replay_cmd);

  std::string rerun_doc, rerun_out;
  auto* rerun = app.add_subcommand("rerun", "repeat the run recorded in a document's manifest");
  rerun->add_option("document", rerun_doc)->required();
  rerun->add_option("-o,--output", rerun_out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  ctx.command = app.get_subcommands().front()->get_name();

  try {
    if (*solve) return cmd_solve(ctx, sf);
    if (*trim_cmd) return cmd_trim(ctx, tf);
    if (*play_cmd) return cmd_play(ctx, pf);
    if (*controller) return cmd_controller(ctx, cf);
    if (*reduce) return cmd_reduce(ctx, reduce_graph, reduce_budget);
    if (*generate) return cmd_generate(ctx, family, gen_n, gen_p, gen_seed);
    if (*validate) return cmd_validate(ctx, vf);
    if (*params) return cmd_params(ctx, regime, logn, param_R);
    if (*route) return cmd_route(ctx, route_graph, route_cops, route_targets, route_r);
    if (*replay_cmd) return cmd_replay(ctx, replay_graph, replay_doc);
    if (*rerun) return cmd_rerun(rerun_doc, rerun_out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const InfeasibleParams& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const StageInvariantError& e) {
    std::cerr << "aborted: " << e.what() << "\n";
    return kAbort;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "bad document: " << e.what() << "\n";
    return kParse;
  } catch (const PursuitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kAbort;
  }
  return kUsage;
}

} // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args);
}
