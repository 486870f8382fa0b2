#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "pursuit/graph.hpp"
#include "pursuit/solver.hpp"

namespace pursuit {

/// Cop number of one strongly connected piece; must return a result with a
/// strategy table if the deployment controller is to be used.
using ComponentSolver = std::function<SolveResult(const Graph&)>;

struct ReductionInstance {
  Condensation condensation;
  std::vector<int> cop_numbers;             // c_j per strong component
  std::vector<int> sources;                 // condensation vertices of in-degree 0, ascending
  std::vector<std::vector<int>> source_sets;  // per j: indices into `sources` feeding j
  std::vector<SolveResult> component_results;
};

/// Covering program: minimise sum x_i subject to sum_{i in S_j} x_i >= c_j.
struct CoveringProblem {
  int variables = 0;
  std::vector<std::pair<std::vector<int>, int>> constraints;
};

struct ReductionSolution {
  std::vector<int> x;  // per source, same order as ReductionInstance::sources
  int total = 0;
};

/// D must be weakly connected. The default solver is the exact solver at speed 1.
ReductionInstance build_instance(const Graph& d, const ComponentSolver& solver = {});

CoveringProblem covering_problem(const ReductionInstance& inst);

/// Minimum total; among optimal assignments the lexicographically smallest.
ReductionSolution solve_covering(const CoveringProblem& problem);
ReductionSolution solve_covering(const ReductionInstance& inst);

/// Sum over weakly connected parts of the covering optimum.
int cop_number_via_reduction(const Graph& d, const SolverOptions& opt = {});

/// x_i cops start in source component i. When the robber shows up in V_j,
/// c_j cops that can reach V_j gather on its winning placement and then play
/// the component's strategy table; they regather whenever the robber moves on.
std::unique_ptr<CopController> deployment_controller(const Graph& d, const ReductionInstance& inst,
                                                     const ReductionSolution& sol);

} // namespace pursuit
