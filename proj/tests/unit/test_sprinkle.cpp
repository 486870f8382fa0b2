#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/rng.hpp"
#include "pursuit/sprinkle.hpp"

using namespace pursuit;

namespace {

// Every violating S by brute force over bit masks.
std::vector<VertexSet> brute_violations(const Graph& g, const VertexSet& cops, const SprinkleOptions& opt, double k) {
  const int n = g.size();
  std::vector<std::vector<int>> dist(n);
  for (Vertex v = 0; v < n; ++v) dist[v] = oracle::bellman_distances(g, v);
  std::vector<bool> is_cop(n, false);
  for (Vertex c : cops) is_cop[c] = true;
  std::vector<VertexSet> found;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size > opt.verify_cap) continue;
    int ball = 0, guarded = 0;
    for (Vertex w = 0; w < n; ++w) {
      bool in = false;
      for (Vertex s = 0; s < n && !in; ++s) {
        if (!(mask >> s & 1)) continue;
        int d = opt.direction == Direction::Out ? dist[s][w] : dist[w][s];
        in = d >= 0 && d <= opt.radius;
      }
      ball += in;
      guarded += in && is_cop[w];
    }
    bool qualifies = opt.unconditional || ball >= k * size;
    if (qualifies && guarded < size) {
      VertexSet s;
      for (Vertex v = 0; v < n; ++v)
        if (mask >> v & 1) s.push_back(v);
      found.push_back(s);
    }
  }
  return found;
}

VertexSet brute_violation(const Graph& g, const VertexSet& cops, const SprinkleOptions& opt, double k) {
  auto all = brute_violations(g, cops, opt, k);
  return all.empty() ? VertexSet{} : *std::min_element(all.begin(), all.end());
}

} // namespace

TEST_CASE("large p takes every vertex") {
  Graph g = cycle_graph(7);
  SprinkleOptions opt;
  opt.p = 0.6;
  SprinkleResult r = sprinkle(g, opt);
  CHECK(r.cops.size() == 7);
}

TEST_CASE("complete graph: qualifying sets need |S| cops") {
  Graph g = complete_graph(6);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SprinkleOptions opt;
    opt.p = 0.3;
    opt.k = 2.0;
    opt.verify_cap = 3;
    opt.seed = seed;
    SprinkleResult r = sprinkle(g, opt);
    CHECK(r.cops.size() >= 3);  // S of size 3 has ball 6 >= 2 * 3
    CHECK(r.cops.size() <= 2 * 0.3 * 6 + 1e-9);
  }
}

TEST_CASE("Petersen at p = 0.5, radius 2") {
  SprinkleOptions opt;
  opt.p = 0.5;
  opt.radius = 2;
  opt.verify_cap = 3;
  opt.seed = 11;
  opt.k = 2.0;
  Graph g = petersen_graph();
  SprinkleResult r = sprinkle(g, opt);
  CHECK(r.cops.size() <= 10);
  CHECK(r.verified_cap >= 3);
  CHECK(brute_violation(g, r.cops, opt, 2.0).empty());
}

TEST_CASE("violation search matches brute force") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    bool directed = seed % 3 == 0;
    Graph g = directed ? random_digraph(7, 0.3, seed) : gnp(8, 0.3, seed);
    Rng rng(seed);
    VertexSet cops = rng.sample(g.size(), static_cast<int>(rng.below(g.size())));
    SprinkleOptions opt;
    opt.radius = 1 + static_cast<int>(seed % 2);
    opt.verify_cap = 3;
    opt.unconditional = seed % 4 == 1;
    opt.direction = directed && seed % 2 ? Direction::In : Direction::Out;
    opt.k = 1.5;
    auto v = sprinkle_violation(g, cops, opt);
    VertexSet expect = brute_violation(g, cops, opt, 1.5);
    CHECK(v.has_value() == !expect.empty());
    if (v && !expect.empty()) CHECK(*v == expect);
  }
}

TEST_CASE("exhausted resampling reports the best attempt and a real violation") {
  Graph g = path_graph(8);
  SprinkleOptions opt;
  opt.p = 0.05;
  opt.unconditional = true;
  opt.verify_cap = 2;
  opt.max_attempts = 5;
  try {
    sprinkle(g, opt);
    FAIL("expected a failure");
  } catch (const SprinkleFailure& e) {
    CHECK_FALSE(e.violating_set().empty());
    CHECK(brute_violation(g, e.best_attempt(), opt, 0).size() > 0);
  }
}

TEST_CASE("default threshold") { CHECK(default_threshold(0.5, 100) == doctest::Approx(32 * std::log(100.0))); }
