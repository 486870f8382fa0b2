#include "pursuit/expansion_controllers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pursuit/errors.hpp"
#include "pursuit/hall.hpp"
#include "pursuit/rng.hpp"
#include "pursuit/sprinkle.hpp"

namespace pursuit {

std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to) {
  std::vector<Vertex> parent(g.size(), -1);
  std::vector<Vertex> queue{from};
  parent[from] = from;
  for (std::size_t head = 0; head < queue.size() && parent[to] < 0; ++head)
    for (Vertex w : g.out(queue[head]))
      if (parent[w] < 0) {
        parent[w] = queue[head];
        queue.push_back(w);
      }
  if (parent[to] < 0) throw InvalidArgument("no path from " + std::to_string(from) + " to " + std::to_string(to));
  std::vector<Vertex> path;
  for (Vertex v = to; v != from; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

VertexSet guard_set(const Graph& g, double p, double k, std::uint64_t seed, int max_attempts) {
  const int n = g.size();
  Rng rng(seed);
  VertexSet best;
  Vertex best_bad = -1;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    VertexSet u;
    for (Vertex v = 0; v < n; ++v)
      if (rng.bernoulli(p)) u.push_back(v);
    if (u.size() > 2 * p * n) continue;
    VertexMask in_u = VertexMask::of(n, u);
    Vertex bad = -1;
    for (Vertex v = 0; v < n && bad < 0; ++v) {
      int ball1 = g.degree(v) + 1;
      if (ball1 < k) continue;
      int hits = 0;
      for (Vertex w : g.out(v)) hits += in_u.test(w);
      if (hits < ball1 * p / 2) bad = v;
    }
    if (bad < 0) return u;
    if (bad > best_bad) {
      best_bad = bad;
      best = u;
    }
  }
  throw SprinkleFailure("no guard set passed verification in " + std::to_string(max_attempts) + " attempts", best,
                        best_bad < 0 ? VertexSet{} : VertexSet{best_bad});
}

namespace {

struct Resolved {
  double p = 0;
  double k = 0;
  int l = 0;
  std::vector<int> radii;
};

std::string show(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

Resolved resolve(const ControllerSetup& setup, Regime regime, int R) {
  Resolved r;
  if (setup.override_params) {
    const auto& o = *setup.override_params;
    if (!(o.p > 0 && o.p < 1)) throw InvalidArgument("override p must lie in (0, 1)");
    if (!(o.k > 0)) throw InvalidArgument("override k must be positive");
    if (o.l < 0) throw InvalidArgument("override l must be nonnegative");
    r.p = o.p;
    r.k = o.k;
    r.l = o.l;
    r.radii = o.radii;
  } else if (setup.params) {
    const auto& e = *setup.params;
    if (e.regime != regime) throw InvalidArgument(std::string("parameters are for the ") + to_string(e.regime) + " regime");
    if (!e.feasible) throw InfeasibleParams("parameter inequalities fail at log n = " + std::to_string(e.log_n));
    r.p = std::exp(e.log_p);
    r.k = std::exp(e.log_k);
    r.l = e.l;
    if (!(r.p > 0) || !std::isfinite(r.k)) throw InfeasibleParams("p underflows at this log n; supply an override");
    for (auto x : e.radii) {
      if (x > 1'000'000'000ULL) throw ResourceError("radius " + std::to_string(x) + " is too large to play");
      r.radii.push_back(static_cast<int>(x));
    }
  } else {
    throw InvalidArgument("controller needs parameters or an override");
  }
  if (regime == Regime::Fast) {
    if (!r.radii.empty() && setup.override_params)
      throw InvalidArgument("the fast controller derives its radii from R");
    r.radii.clear();
    for (auto x : fast_radii(R, r.l + 1)) r.radii.push_back(static_cast<int>(x));
  } else if (regime == Regime::General) {
    if (r.radii.empty())
      for (int i = 0; i <= r.l; ++i) r.radii.push_back(1 << std::min(i, 30));
    if (static_cast<int>(r.radii.size()) != r.l + 1) throw InvalidArgument("general controller needs l+1 radii");
  } else {
    if (r.radii.size() != 1) throw InvalidArgument("digraph controller needs exactly one radius");
  }
  for (int x : r.radii)
    if (x < 1) throw InvalidArgument("radii must be positive");
  return r;
}

// Common play loop: cops follow precomputed paths, step onto an adjacent
// robber whenever possible, and abort if the robber outlives the deadline
// or leaves a predicted set at a checkpoint.
class DispatchCops : public CopController {
public:
  DispatchCops(std::string name, std::vector<Vertex> home) : name_(std::move(name)), home_(std::move(home)) {}
  std::string name() const override { return name_; }
  int cop_count() const override { return static_cast<int>(home_.size()); }

  std::vector<Vertex> decide(const Graph& g, const GameState& s, const GameConfig&, int round) override {
    if (s.phase == Phase::CopsPlace) {
      pos_ = home_;
      paths_.assign(home_.size(), {});
      step_.assign(home_.size(), 0);
      checkpoints_.clear();
      deadline_ = -1;
      planned_ = false;
      return pos_;
    }
    auto sorted = pos_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != s.cops) throw StageInvariantError("cop positions diverged from the controller's plan");
    if (!planned_) {
      plan(g, s.robber);
      planned_ = true;
    }
    const int robber_moves_made = round - 1;
    for (const auto& [t, mask, label] : checkpoints_)
      if (t == robber_moves_made && !mask.test(s.robber))
        throw StageInvariantError("robber at " + std::to_string(s.robber) + " after move " + std::to_string(t) +
                                  " lies outside " + label);
    if (deadline_ >= 0 && round > deadline_)
      throw StageInvariantError("robber still free after cop move " + std::to_string(deadline_));
    std::vector<Vertex> next = pos_;
    for (std::size_t c = 0; c < pos_.size(); ++c)
      if (step_[c] < paths_[c].size()) next[c] = paths_[c][step_[c]++];
    for (std::size_t c = 0; c < pos_.size(); ++c)
      if (g.has_edge(pos_[c], s.robber) || pos_[c] == s.robber) {
        next[c] = s.robber;
        break;
      }
    pos_ = next;
    return pos_;
  }

protected:
  virtual void plan(const Graph& g, Vertex robber) = 0;

  void send(int cop, std::vector<Vertex> path) {
    paths_[cop] = std::move(path);
    step_[cop] = 0;
  }
  void checkpoint(long long move, VertexMask mask, std::string label) {
    checkpoints_.push_back({move, std::move(mask), std::move(label)});
  }
  void set_deadline(long long round) { deadline_ = round; }
  const std::vector<Vertex>& home() const { return home_; }

private:
  struct Check {
    long long move;
    VertexMask mask;
    std::string label;
  };
  std::string name_;
  std::vector<Vertex> home_;
  std::vector<Vertex> pos_;
  std::vector<std::vector<Vertex>> paths_;
  std::vector<std::size_t> step_;
  std::vector<Check> checkpoints_;
  long long deadline_ = -1;
  bool planned_ = false;
};

// Placement covering every vertex; the game ends at placement.
class CoverCops : public DispatchCops {
public:
  explicit CoverCops(std::string name, int n) : DispatchCops(std::move(name), all(n)) {}

protected:
  void plan(const Graph&, Vertex) override {}

private:
  static std::vector<Vertex> all(int n) {
    std::vector<Vertex> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
  }
};

// Stages 0..l of the expansion strategy, optionally behind R guard groups.
class StagedCops : public DispatchCops {
public:
  StagedCops(std::string name, std::vector<Vertex> home, Resolved prm, int R, std::vector<std::vector<int>> stage_groups,
             std::vector<std::vector<int>> guard_groups, std::vector<long long> checkpoints, bool fast)
      : DispatchCops(std::move(name), std::move(home)), prm_(std::move(prm)), R_(R), stages_(std::move(stage_groups)),
        guards_(std::move(guard_groups)), times_(std::move(checkpoints)), fast_(fast) {}

protected:
  double bound_log(int i) const {
    const double lk = std::log(prm_.k);
    return fast_ ? std::ldexp(1.0, R_) * lk + i * lk : (i + 1) * lk;
  }
  std::string bound_text(int i) const {
    return fast_ ? "k^(2^" + std::to_string(R_) + ")*k^" + std::to_string(i) : "k^" + std::to_string(i + 1);
  }
  void check_size(int i, const VertexSet& n_i) const {
    if (std::log(static_cast<double>(std::max<std::size_t>(n_i.size(), 1))) > bound_log(i) + 1e-9)
      throw StageInvariantError("|N_" + std::to_string(i) + "| = " + std::to_string(n_i.size()) + " exceeds " +
                                bound_text(i) + " = " + std::to_string(std::exp(bound_log(i))));
  }

  void plan(const Graph& g, Vertex v) override {
    const int n = g.size();
    VertexMask blocked(n);
    VertexSet n_i;
    Vertex start[] = {v};
    if (fast_) {
      VertexSet b1 = ball(g, start, 1);
      if (b1.size() >= prm_.k) {
        for (int c : guards_[0])
          if (g.has_edge(home()[c], v)) {
            send(c, {v});
            set_deadline(1);
            return;
          }
        throw StageInvariantError("no first guard cop is adjacent to the start vertex " + std::to_string(v));
      }
      std::vector<bool> used(home().size(), false);
      VertexSet reach = b1;
      for (int j = 1; j < R_; ++j) {
        const double log_theta = j * std::log(2 / prm_.p) + std::ldexp(1.0, j - 1) * std::log(prm_.k);
        VertexSet rest;
        for (Vertex w : reach) {
          if (blocked.test(w)) continue;
          if (std::log(static_cast<double>(std::max(g.degree(w), 1))) < log_theta - 1e-12) {
            rest.push_back(w);
            continue;
          }
          int chosen = -1;
          for (int c : guards_[j])
            if (!used[c] && (home()[c] == w || g.has_edge(home()[c], w))) {
              chosen = c;
              break;
            }
          if (chosen < 0)
            throw StageInvariantError("guard group " + std::to_string(j + 1) + " cannot occupy vertex " +
                                      std::to_string(w));
          used[chosen] = true;
          if (home()[chosen] != w) send(chosen, {w});
          blocked.set(w);
        }
        reach = ball(g, rest, 1);
      }
      // first-move region of the robber around the blocked vertices
      std::vector<int> dist(n, -1);
      std::vector<Vertex> queue{v};
      dist[v] = 0;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        Vertex u = queue[h];
        if (dist[u] >= R_) continue;
        for (Vertex w : g.out(u))
          if (dist[w] < 0 && !blocked.test(w)) {
            dist[w] = dist[u] + 1;
            queue.push_back(w);
          }
      }
      n_i = queue;
      std::sort(n_i.begin(), n_i.end());
    } else {
      n_i = ball(g, start, 1);
    }
    check_size(0, n_i);

    for (int i = 0; i <= prm_.l; ++i) {
      const int r = prm_.radii[i];
      Bipartite b(static_cast<int>(n_i.size()), n);
      for (std::size_t a = 0; a < n_i.size(); ++a) {
        Vertex src[] = {n_i[a]};
        for (Vertex w : ball(g, src, r)) b.add(static_cast<int>(a), w);
      }
      BipartitePartition part = split_hall(b, prm_.k);
      VertexSet s_i, t_i;
      for (int a : part.s) s_i.push_back(n_i[a]);
      for (int a : part.t) t_i.push_back(n_i[a]);
      checkpoint(times_[i], VertexMask::of(n, n_i), "N_" + std::to_string(i));
      if (i == prm_.l && !s_i.empty())
        throw StageInvariantError("final stage leaves S_" + std::to_string(i) + " nonempty: |S| = " +
                                  std::to_string(s_i.size()) + " of |N| = " + std::to_string(n_i.size()));
      VertexSet cops;
      std::vector<int> id_at(n, -1);
      for (int c : stages_[i]) {
        cops.push_back(home()[c]);
        id_at[home()[c]] = c;
      }
      std::sort(cops.begin(), cops.end());
      Route route = hall_route(g, cops, t_i, r);
      if (!route.ok())
        throw StageInvariantError("stage " + std::to_string(i) + " routing fails Hall's condition on " +
                                  show(route.deficient));
      for (auto [target, cop] : route.assignment) send(id_at[cop], shortest_path(g, cop, target));
      if (i < prm_.l) {
        n_i = ball(g, s_i, r);
        check_size(i + 1, n_i);
      }
    }
    set_deadline(times_[prm_.l] + 1);
  }

private:
  Resolved prm_;
  int R_;
  std::vector<std::vector<int>> stages_;
  std::vector<std::vector<int>> guards_;
  std::vector<long long> times_;
  bool fast_;
};

class DigraphCops : public DispatchCops {
public:
  DigraphCops(std::vector<Vertex> home, int r) : DispatchCops("digraph", std::move(home)), r_(r) {}

protected:
  void plan(const Graph& g, Vertex v) override {
    Vertex start[] = {v};
    VertexSet targets = ball(g, start, r_, Direction::Out);
    VertexSet cops = home();
    std::vector<int> id_at(g.size(), -1);
    for (std::size_t c = 0; c < cops.size(); ++c) id_at[cops[c]] = static_cast<int>(c);
    std::sort(cops.begin(), cops.end());
    Route route = hall_route(g, cops, targets, r_);
    if (!route.ok()) throw StageInvariantError("out-ball routing fails Hall's condition on " + show(route.deficient));
    for (auto [target, cop] : route.assignment) send(id_at[cop], shortest_path(g, cop, target));
    set_deadline(r_);
  }

private:
  int r_;
};

int budget_unit(double p, int n) { return static_cast<int>(std::ceil(2 * p * n - 1e-9)); }

int global_n(const Graph& g, const ControllerSetup& s) { return s.n_global > 0 ? s.n_global : g.size(); }

std::unique_ptr<CopController> staged(const Graph& g, int R, bool fast, const ControllerSetup& setup,
                                      BudgetReport* report) {
  if (g.directed()) throw InvalidArgument("this controller needs an undirected graph");
  if (R < 1) throw InvalidArgument("speed must be at least 1");
  Resolved prm = resolve(setup, fast ? Regime::Fast : Regime::General, R);
  const int n = g.size();
  const int big_n = global_n(g, setup);
  BudgetReport rep;
  rep.controller = fast ? "fast" : "general";
  rep.p = prm.p;
  rep.k = prm.k;
  rep.l = prm.l;
  for (int x : prm.radii) rep.radii.push_back(static_cast<std::uint64_t>(x));
  const int unit = budget_unit(prm.p, big_n);
  rep.declared = fast ? 2.0 * R * prm.p * big_n + (prm.l + 1.0) * unit : (prm.l + 1.0) * unit;
  rep.verified_cap = setup.verify_cap;
  if (n <= prm.p * big_n) {
    rep.trivial = true;
    rep.actual = n;
    rep.group_sizes = {n};
    if (report) *report = rep;
    return std::make_unique<CoverCops>(rep.controller, n);
  }

  std::vector<long long> times;
  if (fast) {
    for (auto d : d_sequence(R, prm.l + 1)) times.push_back(static_cast<long long>(d / R));
    for (int i = 0; i <= prm.l; ++i)
      if (prm.radii[i] > times[i] + 1) throw InvalidArgument("stage radius exceeds the cops' travel time");
  } else {
    long long t = 1;
    for (int i = 0; i <= prm.l; ++i) {
      if (prm.radii[i] > t) throw InvalidArgument("stage radius r_" + std::to_string(i) + " exceeds its travel time");
      times.push_back(t);
      t += prm.radii[i];
    }
  }

  std::vector<Vertex> home;
  std::vector<std::vector<int>> guards, stages;
  if (fast) {
    VertexSet u = guard_set(g, prm.p, prm.k, derive_seed(setup.seed, 1000), setup.max_attempts);
    for (int j = 0; j < R; ++j) {
      guards.emplace_back();
      for (Vertex x : u) {
        guards.back().push_back(static_cast<int>(home.size()));
        home.push_back(x);
      }
      rep.group_sizes.push_back(static_cast<int>(u.size()));
    }
  }
  for (int i = 0; i <= prm.l; ++i) {
    SprinkleOptions opt;
    opt.p = prm.p;
    opt.radius = prm.radii[i];
    opt.k = prm.k;
    opt.verify_cap = setup.verify_cap;
    opt.seed = derive_seed(setup.seed, static_cast<std::uint64_t>(i));
    opt.max_attempts = setup.max_attempts;
    SprinkleResult sp = sprinkle(g, opt);
    stages.emplace_back();
    for (Vertex x : sp.cops) {
      stages.back().push_back(static_cast<int>(home.size()));
      home.push_back(x);
    }
    rep.group_sizes.push_back(static_cast<int>(sp.cops.size()));
    rep.verified_cap = sp.verified_cap;
  }
  rep.actual = static_cast<int>(home.size());
  if (report) *report = rep;
  return std::make_unique<StagedCops>(rep.controller, std::move(home), std::move(prm), R, std::move(stages),
                                      std::move(guards), std::move(times), fast);
}

} // namespace

std::unique_ptr<CopController> general_cop_controller(const Graph& g, const ControllerSetup& setup,
                                                      BudgetReport* report) {
  return staged(g, 1, false, setup, report);
}

std::unique_ptr<CopController> fast_cop_controller(const Graph& g, int R, const ControllerSetup& setup,
                                                   BudgetReport* report) {
  return staged(g, R, true, setup, report);
}

std::unique_ptr<CopController> digraph_cop_controller(const Graph& g, const ControllerSetup& setup,
                                                      BudgetReport* report) {
  if (!g.directed()) throw InvalidArgument("the digraph controller needs a directed graph");
  Resolved prm = resolve(setup, Regime::Digraph, 1);
  const int n = g.size();
  const int big_n = global_n(g, setup);
  BudgetReport rep;
  rep.controller = "digraph";
  rep.p = prm.p;
  rep.k = prm.k;
  rep.radii = {static_cast<std::uint64_t>(prm.radii[0])};
  rep.declared = budget_unit(prm.p, big_n);
  rep.verified_cap = setup.verify_cap;
  if (n <= prm.p * big_n) {
    rep.trivial = true;
    rep.actual = n;
    rep.group_sizes = {n};
    if (report) *report = rep;
    return std::make_unique<CoverCops>("digraph", n);
  }
  VertexSet home;
  if (setup.override_params && setup.override_params->placement) {
    home = *setup.override_params->placement;
    std::sort(home.begin(), home.end());
    home.erase(std::unique(home.begin(), home.end()), home.end());
    for (Vertex v : home)
      if (v < 0 || v >= n) throw InvalidArgument("placement vertex out of range");
  } else {
    SprinkleOptions opt;
    opt.p = prm.p;
    opt.radius = prm.radii[0];
    opt.unconditional = true;
    opt.direction = Direction::In;
    opt.verify_cap = setup.verify_cap;
    opt.seed = setup.seed;
    opt.max_attempts = setup.max_attempts;
    SprinkleResult sp = sprinkle(g, opt);
    home = sp.cops;
    rep.verified_cap = sp.verified_cap;
  }
  if (home.empty()) throw InvalidArgument("digraph controller fields no cops");
  rep.actual = static_cast<int>(home.size());
  rep.group_sizes = {rep.actual};
  if (report) *report = rep;
  return std::make_unique<DigraphCops>(std::move(home), prm.radii[0]);
}

} // namespace pursuit
