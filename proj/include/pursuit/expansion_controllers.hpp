#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pursuit/game.hpp"
#include "pursuit/params.hpp"

namespace pursuit {

/// Explicit parameters for graphs where the asymptotic inequalities have no
/// solution. radii: per-stage radii (general) or {r} (digraph); the fast
/// controller derives its radii from R.
struct ControllerOverride {
  double p = 0.5;
  double k = 2;
  int l = 0;
  std::vector<int> radii;
  std::optional<VertexSet> placement;  // digraph controller: fixed cop set instead of sprinkling
};

struct ControllerSetup {
  std::optional<ExpansionParams> params;
  std::optional<ControllerOverride> override_params;
  int n_global = 0;          // the n in "m <= pn"; 0 means the graph's own size
  std::uint64_t seed = 0;
  int verify_cap = 2;        // exhaustive sprinkle verification cap
  int max_attempts = 500;    // resampling budget per sprinkled group
};

struct BudgetReport {
  std::string controller;
  double p = 0;
  double k = 0;
  int l = 0;
  std::vector<std::uint64_t> radii;
  double declared = 0;        // the budget the construction promises
  int actual = 0;             // cops actually fielded
  std::vector<int> group_sizes;
  int verified_cap = 0;
  bool trivial = false;       // m <= pn: one cop per vertex
};

/// l+1 sprinkled groups; at the first cop move every group is dispatched to
/// its Hall-routed targets and then stays there.
std::unique_ptr<CopController> general_cop_controller(const Graph& g, const ControllerSetup& setup,
                                                      BudgetReport* report = nullptr);

/// Adds R guard groups on a set U in front of the general stages.
std::unique_ptr<CopController> fast_cop_controller(const Graph& g, int R, const ControllerSetup& setup,
                                                   BudgetReport* report = nullptr);

/// Sprinkled cops; once the robber is placed at v a distinct cop is routed
/// to every vertex of the radius-r out-ball of v.
std::unique_ptr<CopController> digraph_cop_controller(const Graph& g, const ControllerSetup& setup,
                                                      BudgetReport* report = nullptr);

/// A set U with |U| <= 2pn such that every v with |B_1(v)| >= k has at least
/// |B_1(v)| p / 2 members of U among its neighbours. Throws SprinkleFailure.
VertexSet guard_set(const Graph& g, double p, double k, std::uint64_t seed, int max_attempts);

/// Vertices after `from` on a shortest path to `to` (empty if from == to).
std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to);

} // namespace pursuit
