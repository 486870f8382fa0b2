#pragma once

#include <optional>

#include "pursuit/game.hpp"
#include "pursuit/rng.hpp"

namespace pursuit {

/// Cops place on the highest-degree vertices (or a given placement) and each
/// steps one edge along a shortest path toward the robber.
class GreedyCops : public CopController {
public:
  explicit GreedyCops(int count, std::optional<std::vector<Vertex>> placement = std::nullopt);
  std::string name() const override { return "greedy"; }
  int cop_count() const override { return count_; }
  std::vector<Vertex> decide(const Graph& g, const GameState& s, const GameConfig& cfg, int round) override;

private:
  int count_;
  std::optional<std::vector<Vertex>> placement_;
};

/// Uniform random placement; every cop walks to a uniform random out-neighbor.
class RandomCops : public CopController {
public:
  explicit RandomCops(int count) : count_(count) {}
  std::string name() const override { return "random"; }
  int cop_count() const override { return count_; }
  void reset(std::uint64_t seed) override { rng_ = Rng(seed); }
  std::vector<Vertex> decide(const Graph& g, const GameState& s, const GameConfig& cfg, int round) override;

private:
  int count_;
  Rng rng_{0};
};

/// Places as far from the cops as possible and never moves.
class StationaryRobber : public RobberController {
public:
  std::string name() const override { return "stationary"; }
  Vertex decide(const Graph& g, const GameState& s, const GameConfig& cfg, int round) override;
};

/// Uniform random placement on a cop-free vertex and uniform random legal moves.
class RandomRobber : public RobberController {
public:
  std::string name() const override { return "random"; }
  void reset(std::uint64_t seed) override { rng_ = Rng(seed); }
  Vertex decide(const Graph& g, const GameState& s, const GameConfig& cfg, int round) override;

private:
  Rng rng_{0};
};

// Highest-degree vertices first, ties by id; wraps around when count > n.
std::vector<Vertex> spread_placement(const Graph& g, int count);

} // namespace pursuit
