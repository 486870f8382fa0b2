#include "pursuit/reduction.hpp"

#include <algorithm>
#include <limits>

#include "pursuit/errors.hpp"
#include "pursuit/expansion_controllers.hpp"
#include "pursuit/hall.hpp"

namespace pursuit {

namespace {

// reach[a][b]: component b is reachable from component a (a reaches itself).
std::vector<std::vector<bool>> dag_reachability(const Graph& dag) {
  const int t = dag.size();
  std::vector<std::vector<bool>> reach(t, std::vector<bool>(t, false));
  for (int a = 0; a < t; ++a) {
    std::vector<int> stack{a};
    reach[a][a] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (Vertex w : dag.out(u))
        if (!reach[a][w]) {
          reach[a][w] = true;
          stack.push_back(w);
        }
    }
  }
  return reach;
}

} // namespace

ReductionInstance build_instance(const Graph& d, const ComponentSolver& solver) {
  if (!d.directed()) throw InvalidArgument("the reduction needs a directed graph");
  if (weak_components(d).size() != 1) throw InvalidArgument("the reduction needs a weakly connected digraph");
  ReductionInstance inst;
  inst.condensation = strong_components(d);
  const Graph& dag = inst.condensation.dag;
  const int t = dag.size();
  for (int j = 0; j < t; ++j) {
    Subgraph sub = induced(d, inst.condensation.parts[j]);
    SolveResult r = solver ? solver(sub.graph) : cop_number(sub.graph, Speed::finite(1));
    inst.cop_numbers.push_back(r.cop_count);
    inst.component_results.push_back(std::move(r));
  }
  for (int j = 0; j < t; ++j)
    if (dag.in(j).empty()) inst.sources.push_back(j);
  auto reach = dag_reachability(dag);
  inst.source_sets.assign(t, {});
  for (int j = 0; j < t; ++j)
    for (std::size_t i = 0; i < inst.sources.size(); ++i)
      if (reach[inst.sources[i]][j]) inst.source_sets[j].push_back(static_cast<int>(i));
  return inst;
}

CoveringProblem covering_problem(const ReductionInstance& inst) {
  CoveringProblem p;
  p.variables = static_cast<int>(inst.sources.size());
  for (std::size_t j = 0; j < inst.cop_numbers.size(); ++j) p.constraints.emplace_back(inst.source_sets[j], inst.cop_numbers[j]);
  return p;
}

ReductionSolution solve_covering(const CoveringProblem& problem) {
  const int m = problem.variables;
  int lower = 0, upper = 0;
  for (const auto& [set, c] : problem.constraints) {
    if (set.empty() && c > 0) throw InvalidArgument("constraint with no variables");
    lower = std::max(lower, c);
  }
  upper = lower * std::max(m, 1);
  // constraints indexed by their largest variable, checked once it is fixed
  std::vector<std::vector<int>> closes(m);
  for (std::size_t j = 0; j < problem.constraints.size(); ++j) {
    const auto& set = problem.constraints[j].first;
    if (!set.empty()) closes[*std::max_element(set.begin(), set.end())].push_back(static_cast<int>(j));
  }
  std::vector<int> x(m, 0);
  auto satisfied = [&](int j) {
    int sum = 0;
    for (int i : problem.constraints[j].first) sum += x[i];
    return sum >= problem.constraints[j].second;
  };
  auto search = [&](auto&& self, int i, int left) -> bool {
    if (i == m) return left == 0;
    const int lo = i == m - 1 ? left : 0;
    for (int v = lo; v <= left; ++v) {
      x[i] = v;
      bool ok = true;
      for (int j : closes[i])
        if (!satisfied(j)) {
          ok = false;
          break;
        }
      if (ok && self(self, i + 1, left - v)) return true;
    }
    x[i] = 0;
    return false;
  };
  if (m == 0) return ReductionSolution{{}, 0};
  for (int total = lower; total <= upper; ++total)
    if (search(search, 0, total)) return ReductionSolution{x, total};
  throw PursuitError("covering program has no solution");
}

ReductionSolution solve_covering(const ReductionInstance& inst) { return solve_covering(covering_problem(inst)); }

int cop_number_via_reduction(const Graph& d, const SolverOptions& opt) {
  if (!d.directed()) throw InvalidArgument("the reduction needs a directed graph");
  int total = 0;
  ComponentSolver solver = [&](const Graph& g) { return cop_number(g, Speed::finite(1), opt); };
  for (const auto& part : weak_components(d)) {
    Subgraph sub = induced(d, part);
    total += solve_covering(build_instance(sub.graph, solver)).total;
  }
  return total;
}

namespace {

class DeploymentCops : public CopController {
public:
  DeploymentCops(const Graph& d, const ReductionInstance& inst, const ReductionSolution& sol)
      : inst_(inst), reach_(dag_reachability(inst.condensation.dag)) {
    for (std::size_t i = 0; i < inst.sources.size(); ++i) {
      int comp = inst.sources[i];
      const SolveResult& r = inst.component_results[comp];
      const VertexSet& part = inst.condensation.parts[comp];
      for (int c = 0; c < sol.x[i]; ++c) {
        Vertex at = part.front();
        if (sol.x[i] >= r.cop_count && c < static_cast<int>(r.placement.size())) at = part[r.placement[c]];
        else if (!r.placement.empty()) at = part[r.placement.front()];
        home_.push_back(at);
      }
    }
    (void)d;
  }

  std::string name() const override { return "deployment"; }
  int cop_count() const override { return static_cast<int>(home_.size()); }

  std::vector<Vertex> decide(const Graph& d, const GameState& s, const GameConfig&, int) override {
    if (s.phase == Phase::CopsPlace) {
      pos_ = home_;
      target_ = -1;
      assigned_.clear();
      paths_.assign(home_.size(), {});
      return pos_;
    }
    auto sorted = pos_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != s.cops) throw StageInvariantError("cop positions diverged from the deployment plan");
    const int comp = inst_.condensation.part_of[s.robber];
    if (comp != target_) gather(d, comp);
    std::vector<Vertex> next = pos_;
    bool arrived = true;
    for (int c : assigned_)
      if (!paths_[c].empty()) arrived = false;
    if (!arrived) {
      for (std::size_t c = 0; c < pos_.size(); ++c)
        if (!paths_[c].empty()) {
          next[c] = paths_[c].front();
          paths_[c].erase(paths_[c].begin());
        }
    } else {
      play_table(d, s.robber, next);
    }
    for (std::size_t c = 0; c < pos_.size(); ++c)
      if (d.has_edge(pos_[c], s.robber)) {
        next[c] = s.robber;
        break;
      }
    pos_ = next;
    return pos_;
  }

private:
  void gather(const Graph& d, int comp) {
    target_ = comp;
    const SolveResult& r = inst_.component_results[comp];
    const VertexSet& part = inst_.condensation.parts[comp];
    std::vector<Vertex> slots;
    for (Vertex v : r.placement) slots.push_back(part[v]);
    std::vector<bool> taken(pos_.size(), false);
    assigned_.clear();
    for (auto& p : paths_) p.clear();
    for (Vertex slot : slots) {
      Vertex target[] = {slot};
      auto dist = distances(d, target, Direction::In);
      int best = -1;
      for (std::size_t c = 0; c < pos_.size(); ++c) {
        if (taken[c] || dist[pos_[c]] < 0) continue;
        if (best < 0 || dist[pos_[c]] < dist[pos_[best]]) best = static_cast<int>(c);
      }
      if (best < 0)
        throw StageInvariantError("too few cops can reach component " + std::to_string(comp) + " (needs " +
                                  std::to_string(slots.size()) + ")");
      taken[best] = true;
      assigned_.push_back(best);
      paths_[best] = shortest_path(d, pos_[best], slot);
    }
  }

  void play_table(const Graph& d, Vertex robber, std::vector<Vertex>& next) {
    const SolveResult& r = inst_.component_results[target_];
    const VertexSet& part = inst_.condensation.parts[target_];
    auto local = [&](Vertex v) {
      return static_cast<Vertex>(std::lower_bound(part.begin(), part.end(), v) - part.begin());
    };
    std::vector<Vertex> cops;
    for (int c : assigned_) cops.push_back(local(pos_[c]));
    std::sort(cops.begin(), cops.end());
    const Vertex rl = local(robber);
    if (!r.table || !r.table->won(cops, rl, false))
      throw StageInvariantError("gathered cops are outside the component's winning region");
    std::vector<Vertex> reply = r.table->cop_reply(cops, rl);
    // match each assigned cop to one slot of the reply
    Bipartite b(static_cast<int>(assigned_.size()), static_cast<int>(reply.size()));
    for (std::size_t i = 0; i < assigned_.size(); ++i) {
      Vertex from = pos_[assigned_[i]];
      for (std::size_t j = 0; j < reply.size(); ++j) {
        Vertex to = part[reply[j]];
        if (to == from || d.has_edge(from, to)) b.add(static_cast<int>(i), static_cast<int>(j));
      }
    }
    Matching m = match_left(b);
    if (!m.complete()) throw StageInvariantError("strategy table reply is not a legal move");
    for (std::size_t i = 0; i < assigned_.size(); ++i) next[assigned_[i]] = part[reply[m.mate[i]]];
  }

  const ReductionInstance& inst_;
  std::vector<std::vector<bool>> reach_;
  std::vector<Vertex> home_, pos_;
  int target_ = -1;
  std::vector<int> assigned_;
  std::vector<std::vector<Vertex>> paths_;
};

} // namespace

std::unique_ptr<CopController> deployment_controller(const Graph& d, const ReductionInstance& inst,
                                                     const ReductionSolution& sol) {
  if (sol.x.size() != inst.sources.size()) throw InvalidArgument("solution does not match the instance");
  for (const auto& r : inst.component_results)
    if (!r.table) throw InvalidArgument("deployment needs component strategy tables");
  if (sol.total < 1) throw InvalidArgument("deployment needs at least one cop");
  return std::make_unique<DeploymentCops>(d, inst, sol);
}

} // namespace pursuit
