#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "oracles.hpp"
#include "pursuit/controllers.hpp"
#include "pursuit/evaders.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/rng.hpp"
#include "pursuit/validators.hpp"

using namespace pursuit;

namespace {

ValidationOptions exhaustive(int cap) {
  ValidationOptions o;
  o.mode = ValidationMode::Exhaustive;
  o.cap = cap;
  return o;
}

ValidationOptions sampled(int trials, std::uint64_t seed) {
  ValidationOptions o;
  o.mode = ValidationMode::Sampled;
  o.trials = trials;
  o.seed = seed;
  return o;
}

// Calls visit on every subset of {0..n-1} with 1 <= size <= cap.
void subsets(int n, int cap, const std::function<void(const VertexSet&)>& visit) {
  VertexSet cur;
  std::function<void(int)> go = [&](int from) {
    if (!cur.empty()) visit(cur);
    if (static_cast<int>(cur.size()) == cap) return;
    for (int v = from; v < n; ++v) {
      cur.push_back(v);
      go(v + 1);
      cur.pop_back();
    }
  };
  go(0);
}

std::int64_t edges_inside(const Graph& g, const VertexSet& s) {
  std::int64_t e = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) e += g.has_edge(s[i], s[j]);
  return e;
}

Graph disjoint_cliques(int a, int b) {
  Graph g(a + b, false);
  for (int i = 0; i < a; ++i)
    for (int j = i + 1; j < a; ++j) g.add_edge(i, j);
  for (int i = a; i < a + b; ++i)
    for (int j = i + 1; j < a + b; ++j) g.add_edge(i, j);
  return g;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.size(), -1);
  for (Vertex s = 0; s < g.size(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> q{s};
    for (std::size_t h = 0; h < q.size(); ++h)
      for (Vertex w : g.out(q[h])) {
        if (side[w] < 0) {
          side[w] = 1 - side[q[h]];
          q.push_back(w);
        } else if (side[w] == side[q[h]]) {
          return false;
        }
      }
  }
  return true;
}

} // namespace

TEST_CASE("subdivided complete graphs") {
  Graph c6 = subdivide_complete(3);
  CHECK(c6.size() == 6);
  CHECK(c6.edge_count() == 6u);
  for (Vertex v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);
  CHECK(is_connected(c6));

  for (int n = 3; n <= 7; ++n) {
    Graph g = subdivide_complete(n);
    const int pairs = n * (n - 1) / 2;
    CHECK(g.size() == n + pairs);
    CHECK(g.edge_count() == static_cast<std::size_t>(2 * pairs));
    CHECK(is_bipartite(g));
    for (Vertex v = 0; v < n; ++v) CHECK(g.degree(v) == n - 1);
    for (Vertex v = n; v < g.size(); ++v) {
      CHECK(g.degree(v) == 2);
      CHECK(g.out(v).back() < n);
    }
  }
  // internal vertices follow pair order
  Graph k4 = subdivide_complete(4);
  CHECK(k4.out(4) == std::vector<Vertex>{0, 1});
  CHECK(k4.out(9) == std::vector<Vertex>{2, 3});
}

TEST_CASE("random graph generators") {
  CHECK(gnp(50, 0.0, 1).edge_count() == 0u);
  CHECK(gnp(30, 1.0, 1).edge_count() == 435u);
  CHECK(gnp(200, 0.3, 9) == gnp(200, 0.3, 9));
  CHECK_FALSE(gnp(200, 0.3, 9) == gnp(200, 0.3, 10));

  const double mean = 0.2 * 1000 * 999 / 2;
  const double sd = std::sqrt(mean * 0.8);
  const double m = static_cast<double>(gnp(1000, 0.2, 7).edge_count());
  CHECK(std::abs(m - mean) < 5 * sd);

  Graph d = random_digraph(100, 0.1, 3);
  CHECK(d.directed());
  CHECK(d == random_digraph(100, 0.1, 3));
  const double dm = 0.1 * 100 * 99;
  CHECK(std::abs(static_cast<double>(d.edge_count()) - dm) < 5 * std::sqrt(dm));
  CHECK(random_digraph(12, 1.0, 0).edge_count() == 132u);
}

TEST_CASE("set evaluators agree with direct counting") {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = gnp(15, 0.3, trial);
    VertexSet s, t;
    for (Vertex v = 0; v < 15; ++v) {
      if (rng.bernoulli(0.3)) s.push_back(v);
      else if (rng.bernoulli(0.3)) t.push_back(v);
    }
    CHECK(induced_edges(g, s) == edges_inside(g, s));
    std::int64_t cov = 0, cross = 0;
    for (auto [u, v] : g.edge_list()) {
      const bool a = std::binary_search(s.begin(), s.end(), u), b = std::binary_search(s.begin(), s.end(), v);
      cov += a || b;
      cross += (a && std::binary_search(t.begin(), t.end(), v)) || (b && std::binary_search(t.begin(), t.end(), u));
    }
    CHECK(covered_edges(g, s) == cov);
    CHECK(cross_edges(g, s, t) == cross);
  }
  Graph star = star_graph(5);
  CHECK(spread_count(star, {0}, 1) == 5);
  CHECK(spread_count(star, {1, 2}, 2) == 1);
  CHECK(spread_count(star, {1, 2}, 3) == 0);
}

TEST_CASE("subset average degree") {
  ValidatorReport k10 = validate_subset_avg_degree(complete_graph(10), 10, 1.0, exhaustive(3));
  CHECK(k10.verdict == Verdict::Violated);
  CHECK(recheck_witness(complete_graph(10), k10));
  CHECK(validate_subset_avg_degree(Graph(10, false), 10, 0.0, exhaustive(10)).verdict == Verdict::Holds);
  CHECK(validate_subset_avg_degree(Graph(10, false), 10, 0.0, exhaustive(3)).verdict == Verdict::HoldsUpToCap);

  // exhaustive verdicts against a direct scan of all subsets
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = gnp(9, 0.35, seed);
    const double bound = 1.0 + 0.25 * (seed % 6);
    const int cap = 3 + static_cast<int>(seed % 3);
    bool bad = false;
    subsets(9, cap, [&](const VertexSet& s) { bad = bad || 2.0 * edges_inside(g, s) / s.size() > bound; });
    ValidatorReport r = validate_subset_avg_degree(g, cap, bound, exhaustive(cap));
    CHECK((r.verdict == Verdict::Violated) == bad);
    if (bad) CHECK(recheck_witness(g, r));
  }
}

TEST_CASE("cover bound") {
  Graph star = star_graph(5);
  ValidatorReport tight = validate_cover(star, 1, 5, exhaustive(1));
  CHECK(tight.verdict != Verdict::Violated);
  ValidatorReport loose = validate_cover(star, 1, 4, exhaustive(1));
  CHECK(loose.verdict == Verdict::Violated);
  CHECK(loose.witness == VertexSet{0});
  CHECK(recheck_witness(star, loose));
  CHECK(validate_cover(star, 1, 4, sampled(100, 1)).verdict == Verdict::Violated);
}

TEST_CASE("pair connectivity") {
  CHECK(validate_pair_connect(complete_graph(12), 3, exhaustive(3)).verdict != Verdict::Violated);
  CHECK(validate_pair_connect(complete_graph(12), 3, sampled(500, 2)).verdict != Verdict::Violated);
  Graph two = disjoint_cliques(5, 5);
  for (ValidationOptions o : {exhaustive(5), sampled(2000, 3)}) {
    ValidatorReport r = validate_pair_connect(two, 5, o);
    REQUIRE(r.verdict == Verdict::Violated);
    CHECK(r.witness.size() == 5u);
    CHECK(r.witness_other.size() == 5u);
    CHECK(cross_edges(two, r.witness, r.witness_other) == 0);
    CHECK(recheck_witness(two, r));
  }
}

TEST_CASE("sparse spans") {
  Graph k20 = complete_graph(20);
  ValidatorReport r = validate_span_few(k20, 3, 0.1, exhaustive(3));
  CHECK(r.verdict == Verdict::Violated);
  CHECK(recheck_witness(k20, r));
  CHECK(validate_span_few(k20, 3, 1.0, exhaustive(3)).verdict != Verdict::Violated);
  CHECK(validate_span_few(Graph(20, false), 4, 0.01, sampled(200, 1)).verdict != Verdict::Violated);
}

TEST_CASE("degree spread and simple properties") {
  // gamma^3/(2e^5) n < 1 here, so the t range is empty
  ValidatorReport empty = validate_degree_spread(gnp(100, 0.1, 1), 0.25, 10, exhaustive(3));
  CHECK(empty.verdict == Verdict::Holds);

  Graph star = star_graph(6);
  CHECK(validate_degree_range(star, 1, 6).verdict == Verdict::Holds);
  ValidatorReport low = validate_degree_range(star, 2, 6);
  CHECK(low.verdict == Verdict::Violated);
  CHECK(recheck_witness(star, low));
  CHECK(validate_edge_count(star, 6).verdict == Verdict::Holds);
  ValidatorReport few = validate_edge_count(star, 7);
  CHECK(few.verdict == Verdict::Violated);
  CHECK(recheck_witness(star, few));
}

TEST_CASE("validator reports are reproducible") {
  Graph g = gnp(80, 0.2, 5);
  ValidatorReport a = validate_span_few(g, 5, 0.3, sampled(300, 9));
  ValidatorReport b = validate_span_few(g, 5, 0.3, sampled(300, 9));
  CHECK(a.verdict == b.verdict);
  CHECK(a.witness == b.witness);
  CHECK(a.worst_ratio == b.worst_ratio);
  CHECK(to_string(parse_mode(to_string(ValidationMode::Exhaustive))) == "EXHAUSTIVE");
  CHECK_THROWS(parse_mode("sideways"));
}

TEST_CASE("infinite evader") {
  GameConfig cfg{1, Speed::infinite(), false};
  {
    Graph k6 = complete_graph(6);
    GreedyCops cops(1);
    InfiniteEvader ev;
    Trace t = play(k6, cfg, cops, ev, 10, 0);
    CHECK(t.outcome == Outcome::Captured);
    CHECK(ev.surrendered());
    CHECK(ev.status() == "UNSAFE");
  }
  {
    Graph c = cycle_graph(10);
    GreedyCops cops(1);
    InfiniteEvader ev;
    Trace t = play(c, cfg, cops, ev, 200, 0);
    CHECK(t.outcome == Outcome::Survived);
    CHECK_FALSE(ev.surrendered());
    for (Vertex v : ev.state().safe_region) CHECK_FALSE(std::binary_search(ev.state().cop_closed.begin(), ev.state().cop_closed.end(), v));
    CHECK(replay(c, t));
  }
  {
    // two pentagons sharing the cut vertex 0, which a cop holds at the start
    Graph g = Graph::from_edges(9, false, std::vector<std::pair<Vertex, Vertex>>{
                                              {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0}});
    GreedyCops cops(1, std::vector<Vertex>{0});
    InfiniteEvader ev;
    Trace t = play(g, cfg, cops, ev, 100, 0);
    CHECK(t.outcome == Outcome::Survived);
  }
  GameConfig slow{1, Speed::finite(2), false};
  GreedyCops cops(1);
  InfiniteEvader ev;
  Trace t = play(cycle_graph(10), slow, cops, ev, 5, 0);
  CHECK(t.outcome == Outcome::Aborted);
  CHECK(closed_neighbourhood(star_graph(4), std::vector<Vertex>{1}) == VertexSet{0, 1});
}

TEST_CASE("finite evader") {
  FiniteEvader ev(0.5, 12, 4);
  CHECK(ev.layers() == 3);
  CHECK(ev.max_walk() == 4);
  CHECK(ev.core_degree() == 4);

  {
    // the core is empty on a path, so the evader gives up
    Graph p = path_graph(8);
    GreedyCops cops(1, std::vector<Vertex>{0});
    FiniteEvader weak(0.5, 12, 4);
    play(p, GameConfig{1, Speed::finite(4), false}, cops, weak, 5, 0);
    CHECK(weak.surrendered());
  }

  // walks stay within the speed and avoid cops whenever the evader is not beaten
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    Graph g = gnp(150, 12.0 / 150, seed);
    RandomCops cops(4);
    FiniteEvader fe(0.5, 12, 4);
    GameConfig cfg{4, Speed::finite(fe.max_walk()), false};
    Trace t = play(g, cfg, cops, fe, 40, seed);
    CHECK(t.outcome != Outcome::Aborted);
    CHECK(replay(g, t));
    if (!fe.surrendered()) CHECK(t.outcome == Outcome::Survived);
  }
}
