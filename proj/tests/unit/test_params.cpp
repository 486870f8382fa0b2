#include <doctest.h>

#include <cmath>

#include "pursuit/params.hpp"

using namespace pursuit;

namespace {

// log(log(1+p)) from log p, without forming p when it underflows.
double loglog1p(double log_p) {
  if (log_p < -30) return log_p - std::exp(log_p) / 2;
  return std::log(std::log1p(std::exp(log_p)));
}

double log_k(double L, double log_p) { return std::log(16.0) - log_p + std::log(L); }

// Both general inequalities, recomputed here.
bool general_holds(const ExpansionParams& e, double L) {
  double lk = log_k(L, e.log_p);
  double lhs2 = e.l * std::log(2.0) + loglog1p(e.log_p);  // log of 2^l log(1+p)
  double ineq2 = lhs2 - std::log(lk);
  double budget = (e.l + 1) * lk + std::exp(lhs2);
  double ineq1 = L + e.log_p - std::log(2.0) - budget;
  return ineq1 >= 0 && ineq2 >= -1e-9;
}

} // namespace

TEST_CASE("all regimes are feasible at large L") {
  for (double L : {1e4, 1e5, 1e6, 1e7}) {
    ExpansionParams g = solve_params_general(L);
    ExpansionParams d = solve_params_digraph(L);
    ExpansionParams f = solve_params_fast(L, 2);
    CHECK(g.feasible);
    CHECK(d.feasible);
    CHECK(f.feasible);
    CHECK(g.margin1 >= 0);
    CHECK(g.margin2 >= 0);
    CHECK(d.margin1 >= 0);
    CHECK(d.margin2 >= 0);
    CHECK(f.margin1 >= 0);
    CHECK(f.margin2 >= 0);
    CHECK(general_holds(g, L));
    Margins again = evaluate_general(L, g.log_p, g.l);
    CHECK(again.margin1 == doctest::Approx(g.margin1));
  }
}

TEST_CASE("general l is the smallest that satisfies the second inequality") {
  for (double L : {1e4, 1e6}) {
    ExpansionParams g = solve_params_general(L);
    REQUIRE(g.l >= 1);
    double lk = log_k(L, g.log_p);
    CHECK((g.l - 1) * std::log(2.0) + loglog1p(g.log_p) < std::log(lk));
  }
}

TEST_CASE("general l grows like sqrt(log2 n)") {
  double L = 1e7;
  ExpansionParams g = solve_params_general(L);
  double ratio = g.l / std::sqrt(L / std::log(2.0));
  CHECK(ratio >= 0.8);
  CHECK(ratio <= 1.3);
}

TEST_CASE("tiny L is infeasible with the grid reported") {
  ExpansionParams g = solve_params_general(1.0);
  CHECK_FALSE(g.feasible);
  CHECK_FALSE(g.grid.empty());
  for (const auto& pt : g.grid) CHECK((pt.margin1 < 0 || pt.margin2 < 0));
}

TEST_CASE("fast-regime sequences") {
  CHECK(d_sequence(2, 7) == std::vector<std::uint64_t>{2, 3, 5, 8, 12, 18, 27});
  CHECK(fast_radii(2, 7) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 9, 14});
  CHECK(d_sequence(1, 5) == std::vector<std::uint64_t>{1, 2, 4, 8, 16});
  auto d3 = d_sequence(3, 12);
  for (std::size_t i = 0; i + 1 < d3.size(); ++i) CHECK(d3[i + 1] == d3[i] + (d3[i] + 2) / 3);
}

TEST_CASE("digraph p follows its closed form") {
  double L = 1e6;
  ExpansionParams d = solve_params_digraph(L);
  double lp = std::log(13.0) + 2 * std::log(std::log(L)) - std::log(L);
  CHECK(d.log_p == doctest::Approx(lp));
  CHECK(d.r == doctest::Approx(6 / std::exp(lp) * std::log(4 / std::exp(lp))));
}

TEST_CASE("regime names") {
  CHECK(parse_regime("fast") == Regime::Fast);
  CHECK(to_string(Regime::Digraph) == std::string("digraph"));
}
