#include <doctest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "pursuit/controllers.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/game.hpp"

using namespace pursuit;

namespace {

GameState at(std::vector<Vertex> cops, Vertex robber, Phase phase) { return GameState{cops, robber, phase}; }

// Every multiset from moving each cop independently: the product, sorted.
std::set<std::vector<Vertex>> product_moves(const Graph& g, const std::vector<Vertex>& cops) {
  std::set<std::vector<Vertex>> out{{}};
  for (Vertex c : cops) {
    std::set<std::vector<Vertex>> next;
    std::vector<Vertex> opts{c};
    opts.insert(opts.end(), g.out(c).begin(), g.out(c).end());
    for (const auto& partial : out)
      for (Vertex o : opts) {
        auto x = partial;
        x.push_back(o);
        next.insert(x);
      }
    out = std::move(next);
  }
  std::set<std::vector<Vertex>> sorted;
  for (auto x : out) {
    std::sort(x.begin(), x.end());
    sorted.insert(x);
  }
  return sorted;
}

} // namespace

TEST_CASE("speed parsing") {
  CHECK(Speed::parse("2") == Speed::finite(2));
  CHECK(Speed::parse("inf").is_infinite());
  CHECK_THROWS_AS(Speed::parse("0"), InvalidArgument);
  CHECK_THROWS_AS(Speed::parse("fast"), InvalidArgument);
  CHECK(Speed::finite(1) <= Speed::finite(3));
  CHECK(Speed::finite(3) <= Speed::infinite());
  CHECK_FALSE(Speed::infinite() <= Speed::finite(3));
}

TEST_CASE("cop moves are the product of single-cop moves") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = seed % 2 ? random_digraph(5, 0.4, seed) : gnp(6, 0.4, seed);
    Rng rng(seed);
    std::vector<Vertex> cops;
    for (int i = 0; i < 1 + static_cast<int>(seed % 3); ++i) cops.push_back(static_cast<Vertex>(rng.below(g.size())));
    std::sort(cops.begin(), cops.end());
    auto got = cop_moves(g, at(cops, 0, Phase::CopsMove));
    auto expect = product_moves(g, cops);
    CHECK(std::set<std::vector<Vertex>>(got.begin(), got.end()) == expect);
    CHECK(got.size() == expect.size());
    for (const auto& m : expect) CHECK(is_cop_move(g, cops, m));
  }
}

TEST_CASE("is_cop_move rejects multisets outside the product") {
  Graph g = path_graph(4);
  CHECK(is_cop_move(g, {0, 0}, {0, 1}));
  CHECK_FALSE(is_cop_move(g, {0, 0}, {1, 2}));
  CHECK_FALSE(is_cop_move(g, {0, 3}, {3, 3}));
  CHECK(is_cop_move(g, {0, 3}, {1, 2}));
}

TEST_CASE("robber walks avoid cops, endpoint included") {
  Graph g = path_graph(5);
  GameConfig one{1, Speed::finite(1), false};
  GameConfig inf{1, Speed::infinite(), false};
  CHECK(robber_moves(g, at({2}, 0, Phase::RobberMove), inf) == VertexSet{0, 1});
  CHECK(robber_moves(g, at({4}, 0, Phase::RobberMove), one) == VertexSet{0, 1});
  CHECK(robber_moves(g, at({4}, 0, Phase::RobberMove), inf) == VertexSet{0, 1, 2, 3});
  Graph c = cycle_graph(6);
  GameConfig two{1, Speed::finite(2), false};
  CHECK(robber_moves(c, at({1}, 0, Phase::RobberMove), two) == VertexSet{0, 4, 5});
}

TEST_CASE("phase rules") {
  Graph g = path_graph(3);
  GameConfig cfg{1, Speed::finite(1), false};
  GameState s = initial_state();
  CHECK(s.phase == Phase::CopsPlace);
  s = step(g, s, cfg, Decision::cop({1}));
  CHECK(s.phase == Phase::RobberPlace);
  CHECK(step(g, s, cfg, Decision::rob(1)).phase == Phase::Captured);
  CHECK_THROWS_AS(step(g, s, cfg, Decision::cop({0})), IllegalMove);
  s = step(g, s, cfg, Decision::rob(2));
  CHECK(s.phase == Phase::CopsMove);
  CHECK_THROWS_AS(step(g, s, cfg, Decision::cop({0, 1})), IllegalMove);
  GameState moved = step(g, s, cfg, Decision::cop({0}));
  CHECK(moved.phase == Phase::RobberMove);
  CHECK_THROWS_AS(step(g, moved, cfg, Decision::rob(0)), IllegalMove);
  GameState caught = step(g, s, cfg, Decision::cop({2}));
  CHECK(caught.phase == Phase::Captured);
  CHECK_THROWS_AS(step(g, caught, cfg, Decision::cop({2})), IllegalMove);
}

TEST_CASE("cops covering every vertex capture at placement") {
  Graph g = path_graph(2);
  GameConfig cfg{2, Speed::finite(1), false};
  GameState s = step(g, initial_state(), cfg, Decision::cop({0, 1}));
  CHECK(s.phase == Phase::Captured);
  CHECK(s.robber == kUnplaced);
}

TEST_CASE("play records a replayable trace") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = oracle::random_connected(8, 0.2, seed);
    GreedyCops cops(2);
    RandomRobber robber;
    GameConfig cfg{2, seed % 2 ? Speed::infinite() : Speed::finite(2), false};
    Trace t = play(g, cfg, cops, robber, 50, seed);
    CHECK(t.outcome != Outcome::Aborted);
    CHECK(replay(g, t));
    Trace again = play(g, cfg, cops, robber, 50, seed);
    CHECK(again.entries.size() == t.entries.size());
    CHECK(again.final_state() == t.final_state());
    std::ostringstream lines;
    write_trace_lines(lines, t);
    std::istringstream in(lines.str());
    auto back = read_trace_lines(in);
    REQUIRE(back.size() == t.entries.size());
    for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i].second == t.entries[i].state);
  }
}

TEST_CASE("a tampered trace fails replay") {
  Graph g = path_graph(6);
  GreedyCops cops(1);
  StationaryRobber robber;
  GameConfig cfg{1, Speed::finite(1), false};
  Trace t = play(g, cfg, cops, robber, 20, 1);
  CHECK(t.outcome == Outcome::Captured);
  REQUIRE(t.entries.size() > 3);
  t.entries[2].state.cops = {5};
  CHECK_FALSE(replay(g, t));
}

TEST_CASE("controller errors end play as aborted") {
  struct Bad : CopController {
    std::string name() const override { return "bad"; }
    int cop_count() const override { return 1; }
    std::vector<Vertex> decide(const Graph&, const GameState& s, const GameConfig&, int) override {
      return s.phase == Phase::CopsPlace ? std::vector<Vertex>{0} : std::vector<Vertex>{3};
    }
  } bad;
  Graph g = path_graph(5);
  RandomRobber robber;
  Trace t = play(g, GameConfig{1, Speed::finite(1), false}, bad, robber, 10, 0);
  CHECK(t.outcome == Outcome::Aborted);
  CHECK(t.diagnostic.rfind("illegal move: ", 0) == 0);
}
