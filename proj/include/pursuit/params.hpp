#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pursuit {

enum class Regime { General, Digraph, Fast };
const char* to_string(Regime r);
Regime parse_regime(const std::string& s);

struct GridPoint {
  double epsilon = 0;
  double margin1 = 0;
  double margin2 = 0;
};

/// All quantities live in log-space: p itself underflows double for large L.
/// margin1 is RHS - LHS of the budget inequality, margin2 is LHS - RHS of the
/// (1+p)^r >= k inequality; both must be >= 0.
struct ExpansionParams {
  Regime regime = Regime::General;
  double log_n = 0;   // L
  int R = 1;          // robber speed (fast regime)
  double alpha = 2;   // 1 + 1/R
  double epsilon = 0;
  double log_p = 0;
  double p = 0;       // exp(log_p); 0 if it underflows
  double log_k = 0;   // k = (16/p) L
  int l = 0;
  std::vector<std::uint64_t> radii;       // exact prefix of r_0..r_l
  std::vector<std::uint64_t> d_sequence;  // exact prefix of d_0..d_l (fast)
  double log_r_lo = 0, log_r_hi = 0;      // bounds on log r_l (log r for digraphs)
  double r = 0;                            // digraph radius (6/p) log(4/p)
  double margin1 = 0;
  double margin2 = 0;
  bool feasible = false;
  std::vector<GridPoint> grid;  // every grid point tried
};

ExpansionParams solve_params_general(double L);
ExpansionParams solve_params_digraph(double L);
ExpansionParams solve_params_fast(double L, int R);

/// Re-evaluates both inequalities from (log_n, log_p, l) from scratch.
struct Margins {
  double margin1 = 0;
  double margin2 = 0;
};
Margins evaluate_general(double L, double log_p, int l);
Margins evaluate_digraph(double L, double log_p, double r);
Margins evaluate_fast(double L, int R, double log_p, int l);

/// d_0 = R, d_{i+1} = d_i + ceil(d_i / R); r_i = ceil(d_i / R). Entries stop
/// before uint64 overflow.
std::vector<std::uint64_t> d_sequence(int R, int count);
std::vector<std::uint64_t> fast_radii(int R, int count);

/// log(log(1+p)) given log p, accurate when p underflows.
double log_log1p(double log_p);

} // namespace pursuit
