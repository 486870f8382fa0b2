#include "pursuit/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "pursuit/errors.hpp"

namespace pursuit {

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSat / a) return kSat;
  return a * b;
}

std::uint64_t binom_sat(int a, int b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  // multiplicative formula in long double is exact enough to detect saturation
  std::uint64_t r = 1;
  for (int i = 1; i <= b; ++i) {
    std::uint64_t num = static_cast<std::uint64_t>(a - b + i);
    if (r > kSat / num) return kSat;
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

// Vertices reachable from start by walks of length <= limit through unblocked vertices.
void reach(const Graph& g, const VertexMask& blocked, Vertex start, int limit, std::vector<int>& dist,
           std::vector<Vertex>& out) {
  out.clear();
  out.push_back(start);
  dist[start] = 0;
  for (std::size_t head = 0; head < out.size(); ++head) {
    Vertex u = out[head];
    if (dist[u] >= limit) continue;
    for (Vertex w : g.out(u))
      if (dist[w] < 0 && !blocked.test(w)) {
        dist[w] = dist[u] + 1;
        out.push_back(w);
      }
  }
  for (Vertex v : out) dist[v] = -1;
}

} // namespace

StateIndex::StateIndex(int n, int c) : n_(n), c_(c) {
  if (n < 1 || c < 1) throw InvalidArgument("state index needs n >= 1 and c >= 1");
  multisets_ = binom_sat(n + c - 1, c);
  if (multisets_ == kSat || multisets_ > std::numeric_limits<std::uint32_t>::max())
    throw ResourceError("cop multiset count overflows the index");
  table_.assign(static_cast<std::size_t>(n + c) * (c + 1), 0);
  for (int a = 0; a < n + c; ++a)
    for (int b = 0; b <= c; ++b) table_[static_cast<std::size_t>(a) * (c + 1) + b] = binom_sat(a, b);
}

std::uint64_t StateIndex::binom(int a, int b) const {
  return table_[static_cast<std::size_t>(a) * (c_ + 1) + b];
}

std::uint64_t StateIndex::space_size(int n, int c) {
  return mul_sat(mul_sat(binom_sat(n + c - 1, c), static_cast<std::uint64_t>(n)), 2);
}

std::uint64_t StateIndex::rank_cops(std::span<const Vertex> sorted) const {
  std::uint64_t r = 0;
  for (int i = 0; i < c_; ++i) r += binom(sorted[i] + i, i + 1);
  return r;
}

std::vector<Vertex> StateIndex::unrank_cops(std::uint64_t m) const {
  std::vector<Vertex> out(c_);
  int hi = n_ + c_ - 1;
  for (int i = c_ - 1; i >= 0; --i) {
    int b = hi - 1;
    while (binom(b, i + 1) > m) --b;
    m -= binom(b, i + 1);
    out[i] = b - i;
    hi = b;
  }
  return out;
}

std::uint64_t StateIndex::encode(std::span<const Vertex> sorted, Vertex robber, bool robber_moves) const {
  return (rank_cops(sorted) * n_ + robber) * 2 + (robber_moves ? 1 : 0);
}

StateIndex::Decoded StateIndex::decode(std::uint64_t id) const {
  bool mover = id & 1;
  id >>= 1;
  Vertex r = static_cast<Vertex>(id % n_);
  return Decoded{unrank_cops(id / n_), r, mover};
}

std::int32_t StrategyTable::rank(std::span<const Vertex> sorted_cops, Vertex robber, bool robber_moves) const {
  return rank_[index_.encode(sorted_cops, robber, robber_moves)];
}

std::vector<Vertex> StrategyTable::cop_reply(std::span<const Vertex> sorted_cops, Vertex robber) const {
  std::uint64_t id = index_.rank_cops(sorted_cops) * index_.n() + robber;
  if (best_[id] == std::numeric_limits<std::uint32_t>::max())
    return std::vector<Vertex>(sorted_cops.begin(), sorted_cops.end());
  return index_.unrank_cops(best_[id]);
}

std::uint64_t default_state_budget() {
  if (const char* env = std::getenv("PURSUIT_STATE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 40'000'000;
}

SolveResult solve_game(const Graph& g, const GameConfig& cfg, const SolverOptions& opt) {
  cfg.validate(g);
  const int n = g.size();
  const int c = cfg.cop_count;
  const std::uint64_t budget = opt.state_budget ? opt.state_budget : default_state_budget();
  const std::uint64_t space = StateIndex::space_size(n, c);
  if (space > budget)
    throw ResourceError("state space of " + (space == kSat ? std::string("more than 2^64") : std::to_string(space)) +
                        " states exceeds the budget of " + std::to_string(budget));
  StateIndex index(n, c);
  const std::uint64_t M = index.multiset_count();
  const auto cop_state = [&](std::uint64_t m, Vertex r) { return (m * n + r) * 2; };

  std::vector<std::int32_t> rank(index.size(), StrategyTable::kLost);
  std::vector<std::uint32_t> best(M * n, std::numeric_limits<std::uint32_t>::max());
  std::vector<std::uint32_t> counter(M * n, 0);
  std::vector<std::vector<std::uint32_t>> pred(M);
  std::vector<bool> pred_ready(M, false);
  std::uint64_t transitions = 0;

  const Graph rev = g.directed() ? g.reversed() : Graph();
  const Graph& back = g.directed() ? rev : g;
  const int limit = cfg.speed.limit();

  std::vector<int> dist(n, -1);
  std::vector<Vertex> buf;
  std::vector<std::uint64_t> robber_level, cop_level;

  for (std::uint64_t m = 0; m < M; ++m) {
    auto cops = index.unrank_cops(m);
    VertexMask blocked = VertexMask::of(n, cops);
    for (Vertex r = 0; r < n; ++r) {
      if (blocked.test(r)) {
        rank[cop_state(m, r)] = 0;
        rank[cop_state(m, r) + 1] = 0;
        robber_level.push_back(m * n + r);
      } else {
        reach(g, blocked, r, limit, dist, buf);
        counter[m * n + r] = static_cast<std::uint32_t>(buf.size());
      }
    }
  }

  for (std::int32_t k = 0; !robber_level.empty(); ++k) {
    cop_level.clear();
    for (std::uint64_t id : robber_level) {
      std::uint64_t m = id / n;
      Vertex r = static_cast<Vertex>(id % n);
      if (!pred_ready[m]) {
        GameState s{index.unrank_cops(m), kUnplaced, Phase::CopsMove};
        for (const auto& prev : cop_moves(back, s)) pred[m].push_back(static_cast<std::uint32_t>(index.rank_cops(prev)));
        pred_ready[m] = true;
        // transitions count against the same budget as states
        transitions += pred[m].size();
        if (transitions > budget)
          throw ResourceError("cop transitions exceed the budget of " + std::to_string(budget));
      }
      for (std::uint32_t pm : pred[m]) {
        auto& slot = rank[cop_state(pm, r)];
        if (slot == StrategyTable::kLost) {
          slot = k + 1;
          best[pm * n + r] = static_cast<std::uint32_t>(m);
          cop_level.push_back(pm * n + r);
        }
      }
    }
    robber_level.clear();
    for (std::uint64_t id : cop_level) {
      std::uint64_t m = id / n;
      Vertex r = static_cast<Vertex>(id % n);
      VertexMask blocked = VertexMask::of(n, index.unrank_cops(m));
      reach(back, blocked, r, limit, dist, buf);
      for (Vertex from : buf) {
        if (--counter[m * n + from] == 0) {
          rank[cop_state(m, from) + 1] = k + 1;
          robber_level.push_back(m * n + from);
        }
      }
    }
  }

  SolveResult res;
  res.cop_count = c;
  res.config = cfg;
  res.states = index.size();
  std::int32_t best_worst = -1;
  for (std::uint64_t m = 0; m < M; ++m) {
    std::int32_t worst = 0;
    for (Vertex r = 0; r < n && worst >= 0; ++r) {
      std::int32_t v = rank[cop_state(m, r)];
      worst = v < 0 ? -1 : std::max(worst, v);
    }
    if (worst < 0) continue;
    auto cops = index.unrank_cops(m);
    if (best_worst < 0 || worst < best_worst || (worst == best_worst && cops < res.placement)) {
      best_worst = worst;
      res.placement = std::move(cops);
    }
  }
  res.cops_win = best_worst >= 0;
  res.capture_bound = best_worst;
  res.table = std::make_shared<StrategyTable>(std::move(index), std::move(rank), std::move(best));
  return res;
}

SolveResult cops_win(const Graph& g, int c, Speed speed, const SolverOptions& opt) {
  return solve_game(g, GameConfig{c, speed, g.directed()}, opt);
}

SolveResult cop_number(const Graph& g, Speed speed, const SolverOptions& opt) {
  auto parts = g.directed() ? weak_components(g) : components(g);
  if (parts.size() > 1) {
    SolveResult total;
    total.config = GameConfig{0, speed, g.directed()};
    total.cops_win = true;
    total.capture_bound = 0;
    for (const auto& part : parts) {
      Subgraph sub = induced(g, part);
      SolveResult r = cop_number(sub.graph, speed, opt);
      total.cop_count += r.cop_count;
      total.states += r.states;
      total.capture_bound = std::max(total.capture_bound, r.capture_bound);
      for (Vertex v : r.placement) total.placement.push_back(sub.to_parent[v]);
    }
    total.config.cop_count = total.cop_count;
    std::sort(total.placement.begin(), total.placement.end());
    return total;
  }
  std::uint64_t explored = 0;
  for (int c = 1;; ++c) {
    SolveResult r = cops_win(g, c, speed, opt);
    explored += r.states;
    if (r.cops_win) {
      r.states = explored;
      return r;
    }
  }
}

OptimalCops::OptimalCops(SolveResult result) : result_(std::move(result)) {
  if (!result_.table) throw InvalidArgument("optimal cops need a strategy table");
}

std::vector<Vertex> OptimalCops::decide(const Graph& g, const GameState& s, const GameConfig&, int) {
  if (s.phase == Phase::CopsPlace) {
    if (!result_.placement.empty()) return result_.placement;
    return std::vector<Vertex>(result_.cop_count, 0);
  }
  (void)g;
  return result_.table->cop_reply(s.cops, s.robber);
}

OptimalRobber::OptimalRobber(SolveResult result) : result_(std::move(result)) {
  if (!result_.table) throw InvalidArgument("optimal robber needs a strategy table");
}

Vertex OptimalRobber::decide(const Graph& g, const GameState& s, const GameConfig& cfg, int) {
  const auto& t = *result_.table;
  auto score = [&](Vertex r) {
    std::int32_t k = t.rank(s.cops, r, false);
    return k == StrategyTable::kLost ? std::numeric_limits<std::int32_t>::max() : k;
  };
  VertexSet options;
  if (s.phase == Phase::RobberPlace) {
    VertexMask occupied = VertexMask::of(g.size(), s.cops);
    options = occupied.complement().members();
    if (options.empty()) return 0;
  } else {
    options = robber_moves(g, s, cfg);
  }
  Vertex best = options.front();
  for (Vertex r : options)
    if (score(r) > score(best)) best = r;
  return best;
}

} // namespace pursuit
