#include "pursuit/evaders.hpp"

#include <algorithm>
#include <cmath>

#include "pursuit/errors.hpp"

namespace pursuit {

VertexSet closed_neighbourhood(const Graph& g, std::span<const Vertex> cops) {
  VertexMask m(g.size());
  for (Vertex c : cops) {
    m.set(c);
    for (Vertex w : g.out(c)) m.set(w);
    for (Vertex w : g.in(c)) m.set(w);
  }
  return m.members();
}

namespace {

VertexMask outside(const Graph& g, const VertexSet& closed) {
  VertexMask m = VertexMask::full(g.size());
  for (Vertex v : closed) m.reset(v);
  return m;
}

// Components of the allowed part, largest first, ties to the smaller least vertex.
std::vector<VertexSet> ranked_components(const Graph& g, const VertexMask& allowed) {
  auto parts = components_within(g, allowed);
  std::stable_sort(parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return parts;
}

// Fallback placement when the strategy has nothing to offer.
Vertex any_free(const Graph& g, const GameState& s) {
  VertexMask cops = VertexMask::of(g.size(), s.cops);
  for (Vertex v = 0; v < g.size(); ++v)
    if (!cops.test(v)) return v;
  throw IllegalMove("no cop-free vertex to place on");
}

} // namespace

void InfiniteEvader::reset(std::uint64_t) {
  state_ = {};
  surrendered_ = false;
}

Vertex InfiniteEvader::decide(const Graph& g, const GameState& s, const GameConfig& cfg, int) {
  if (!cfg.speed.is_infinite()) throw InvalidArgument("the infinite evader needs robber speed inf");
  state_.cop_closed = closed_neighbourhood(g, s.cops);
  auto parts = ranked_components(g, outside(g, state_.cop_closed));
  if (s.phase == Phase::RobberPlace) {
    if (parts.empty()) {
      surrendered_ = true;
      state_.safe_region.clear();
      return any_free(g, s);
    }
    state_.safe_region = parts.front();
    return parts.front().front();
  }
  VertexSet reach = robber_moves(g, s, cfg);
  VertexMask reachable = VertexMask::of(g.size(), reach);
  for (const auto& part : parts) {
    if (std::binary_search(part.begin(), part.end(), s.robber)) {
      state_.safe_region = part;
      return s.robber;
    }
    for (Vertex v : part)
      if (reachable.test(v)) {
        state_.safe_region = part;
        if (std::binary_search(s.cops.begin(), s.cops.end(), v))
          throw StageInvariantError("evader target is a cop vertex");
        return v;
      }
  }
  surrendered_ = true;
  state_.safe_region.clear();
  return s.robber;
}

FiniteEvader::FiniteEvader(double c, double np, double s0)
    : layers_(static_cast<int>(std::ceil(1.0 / c - 1e-9)) + 1),
      core_(static_cast<int>(std::ceil(np / 3.0 - 1e-9))),
      s0_(s0) {
  if (!(c > 0 && c <= 1)) throw InvalidArgument("finite evader needs 0 < c <= 1");
  if (!(np > 0)) throw InvalidArgument("finite evader needs np > 0");
}

void FiniteEvader::reset(std::uint64_t) {
  state_ = {};
  surrendered_ = false;
}

Vertex FiniteEvader::decide(const Graph& g, const GameState& s, const GameConfig& cfg, int) {
  if (cfg.speed.limit() < max_walk())
    throw InvalidArgument("finite evader needs speed >= " + std::to_string(max_walk()));
  const int n = g.size();
  VertexSet closed = closed_neighbourhood(g, s.cops);
  VertexSet fresh = k_core_within(g, outside(g, closed), core_);
  state_.cop_closed = closed;
  if (s.phase == Phase::RobberPlace) {
    state_.safe_region = fresh;
    state_.frontier.clear();
    if (fresh.empty()) {
      surrendered_ = true;
      return any_free(g, s);
    }
    return fresh.front();
  }
  if (surrendered_) return s.robber;
  VertexMask now = VertexMask::of(n, fresh);
  if (now.test(s.robber)) {
    state_.safe_region = fresh;
    state_.frontier = {{s.robber}};
    return s.robber;
  }
  // BFS inside the old core avoiding cops.
  VertexMask old = VertexMask::of(n, state_.safe_region);
  for (Vertex c : s.cops) old.reset(c);
  VertexMask cop_mask = VertexMask::of(n, s.cops);
  std::vector<int> dist(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<VertexSet> layers{{s.robber}};
  dist[s.robber] = 0;
  while (static_cast<int>(layers.size()) <= layers_ && static_cast<double>(layers.back().size()) < s0_) {
    VertexSet next;
    for (Vertex u : layers.back())
      for (Vertex w : g.out(u))
        if (old.test(w) && dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          next.push_back(w);
        }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    layers.push_back(std::move(next));
  }
  state_.frontier = layers;
  // one edge from any layer into the new core
  Vertex best_from = -1, best_to = -1;
  for (const auto& layer : layers) {
    for (Vertex u : layer)
      for (Vertex w : g.out(u))
        if (now.test(w) && !cop_mask.test(w) && (best_to < 0 || w < best_to)) {
          best_from = u;
          best_to = w;
        }
    if (best_to >= 0) break;
  }
  if (best_to < 0) {
    surrendered_ = true;
    state_.safe_region.clear();
    return s.robber;
  }
  int length = dist[best_from] + 1;
  if (length > max_walk()) throw StageInvariantError("finite evader walk exceeds its speed");
  for (Vertex v = best_from; v >= 0; v = parent[v])
    if (cop_mask.test(v)) throw StageInvariantError("finite evader walk meets a cop");
  state_.safe_region = fresh;
  return best_to;
}

} // namespace pursuit
