#pragma once

#include "pursuit/game.hpp"

namespace pursuit {

struct EvaderState {
  VertexSet cop_closed;                 // C+ = C and its neighbours
  VertexSet safe_region;                // where the robber means to be
  std::vector<VertexSet> frontier;      // BFS layers of the last search (finite evader)
};

/// Speed-infinity evader: sits in the largest component of G - C+, moving to
/// the current largest one whenever it can get there avoiding cops.
class InfiniteEvader : public RobberController {
public:
  std::string name() const override { return "infinite-evader"; }
  void reset(std::uint64_t) override;
  Vertex decide(const Graph& g, const GameState& s, const GameConfig& cfg, int round) override;
  bool surrendered() const override { return surrendered_; }
  const EvaderState& state() const { return state_; }

private:
  EvaderState state_;
  bool surrendered_ = false;
};

/// Finite-speed evader living in the ceil(np/3)-core H of G - C+. After each
/// cop move it searches at most ceil(1/c)+1 BFS layers of the old H (stopping
/// early once a layer has s0 vertices) for one edge into the new core.
class FiniteEvader : public RobberController {
public:
  FiniteEvader(double c, double np, double s0);
  std::string name() const override { return "finite-evader"; }
  void reset(std::uint64_t) override;
  Vertex decide(const Graph& g, const GameState& s, const GameConfig& cfg, int round) override;
  bool surrendered() const override { return surrendered_; }
  const EvaderState& state() const { return state_; }

  int layers() const { return layers_; }       // ceil(1/c) + 1
  int max_walk() const { return layers_ + 1; }  // ceil(1/c) + 2
  int core_degree() const { return core_; }

private:
  int layers_;
  int core_;
  double s0_;
  EvaderState state_;
  bool surrendered_ = false;
};

/// C+ over the underlying graph.
VertexSet closed_neighbourhood(const Graph& g, std::span<const Vertex> cops);

} // namespace pursuit
