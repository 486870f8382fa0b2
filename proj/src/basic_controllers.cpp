#include <algorithm>
#include <numeric>

#include "pursuit/controllers.hpp"
#include "pursuit/errors.hpp"

namespace pursuit {

std::vector<Vertex> spread_placement(const Graph& g, int count) {
  std::vector<Vertex> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<Vertex> out;
  for (int i = 0; i < count; ++i) out.push_back(order[i % g.size()]);
  std::sort(out.begin(), out.end());
  return out;
}

GreedyCops::GreedyCops(int count, std::optional<std::vector<Vertex>> placement)
    : count_(count), placement_(std::move(placement)) {
  if (count < 1) throw InvalidArgument("greedy cops need at least one cop");
  if (placement_ && static_cast<int>(placement_->size()) != count)
    throw InvalidArgument("greedy placement size differs from cop count");
}

std::vector<Vertex> GreedyCops::decide(const Graph& g, const GameState& s, const GameConfig&, int) {
  if (s.phase == Phase::CopsPlace) return placement_ ? *placement_ : spread_placement(g, count_);
  // Distance of every vertex to the robber, following edges toward him.
  Vertex target[] = {s.robber};
  auto dist = distances(g, target, Direction::In);
  std::vector<Vertex> next;
  for (Vertex c : s.cops) {
    Vertex best = c;
    for (Vertex w : g.out(c))
      if (dist[w] >= 0 && (dist[best] < 0 || dist[w] < dist[best])) best = w;
    next.push_back(best);
  }
  return next;
}

std::vector<Vertex> RandomCops::decide(const Graph& g, const GameState& s, const GameConfig&, int) {
  std::vector<Vertex> next;
  if (s.phase == Phase::CopsPlace) {
    for (int i = 0; i < count_; ++i) next.push_back(static_cast<Vertex>(rng_.below(g.size())));
    return next;
  }
  for (Vertex c : s.cops) {
    const auto& nb = g.out(c);
    next.push_back(nb.empty() ? c : nb[rng_.below(nb.size())]);
  }
  return next;
}

Vertex StationaryRobber::decide(const Graph& g, const GameState& s, const GameConfig&, int) {
  if (s.phase == Phase::RobberMove) return s.robber;
  auto dist = distances(g, s.cops, Direction::Out);
  Vertex best = -1;
  auto key = [&](Vertex v) { return dist[v] < 0 ? kUnbounded : dist[v]; };
  for (Vertex v = 0; v < g.size(); ++v)
    if (dist[v] != 0 && (best < 0 || key(v) > key(best))) best = v;
  return best < 0 ? 0 : best;
}

Vertex RandomRobber::decide(const Graph& g, const GameState& s, const GameConfig& cfg, int) {
  if (s.phase == Phase::RobberMove) {
    auto moves = robber_moves(g, s, cfg);
    return moves[rng_.below(moves.size())];
  }
  VertexMask occupied = VertexMask::of(g.size(), s.cops);
  auto free = occupied.complement().members();
  if (free.empty()) return 0;
  return free[rng_.below(free.size())];
}

} // namespace pursuit
