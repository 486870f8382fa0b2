#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "pursuit/game.hpp"

namespace pursuit {

/// Dense numbering of (sorted cop multiset, robber vertex, mover). Multisets
/// are ranked in the combinatorial number system.
class StateIndex {
public:
  StateIndex(int n, int c);

  int n() const { return n_; }
  int cops() const { return c_; }
  std::uint64_t multiset_count() const { return multisets_; }
  std::uint64_t size() const { return multisets_ * static_cast<std::uint64_t>(n_) * 2; }

  std::uint64_t rank_cops(std::span<const Vertex> sorted) const;
  std::vector<Vertex> unrank_cops(std::uint64_t m) const;

  // mover: false = cops to move, true = robber to move
  std::uint64_t encode(std::span<const Vertex> sorted, Vertex robber, bool robber_moves) const;
  struct Decoded {
    std::vector<Vertex> cops;
    Vertex robber;
    bool robber_moves;
  };
  Decoded decode(std::uint64_t id) const;

  /// C(n+c-1, c) * n * 2, saturating at UINT64_MAX.
  static std::uint64_t space_size(int n, int c);

private:
  std::uint64_t binom(int a, int b) const;
  int n_, c_;
  std::uint64_t multisets_;
  std::vector<std::uint64_t> table_;  // (n+c) x (c+1) binomials
};

/// Attractor ranks and the cops' optimal replies for one (graph, c, speed).
class StrategyTable {
public:
  static constexpr std::int32_t kLost = -1;

  StrategyTable(StateIndex index, std::vector<std::int32_t> rank, std::vector<std::uint32_t> best)
      : index_(std::move(index)), rank_(std::move(rank)), best_(std::move(best)) {}

  const StateIndex& index() const { return index_; }
  /// Cop moves to capture under optimal play, or kLost when the robber escapes forever.
  std::int32_t rank(std::span<const Vertex> sorted_cops, Vertex robber, bool robber_moves) const;
  bool won(std::span<const Vertex> sorted_cops, Vertex robber, bool robber_moves) const {
    return rank(sorted_cops, robber, robber_moves) != kLost;
  }
  /// The cops' rank-decreasing reply from a cop-win cops-to-move state.
  std::vector<Vertex> cop_reply(std::span<const Vertex> sorted_cops, Vertex robber) const;

private:
  StateIndex index_;
  std::vector<std::int32_t> rank_;
  std::vector<std::uint32_t> best_;  // per cops-to-move state: multiset rank of the reply
};

struct SolverOptions {
  std::uint64_t state_budget = 0;  // 0 selects default_state_budget()
};

/// PURSUIT_STATE_BUDGET if set, else 40 million states.
std::uint64_t default_state_budget();

struct SolveResult {
  int cop_count = 0;
  GameConfig config;
  bool cops_win = false;
  std::vector<Vertex> placement;  // a winning placement when cops_win
  int capture_bound = -1;         // max cop moves to capture from `placement`
  std::uint64_t states = 0;       // states explored
  std::shared_ptr<const StrategyTable> table;  // absent for per-component sums
};

/// Decides whether cfg.cop_count cops win. Throws ResourceError if the state
/// space exceeds the budget.
SolveResult solve_game(const Graph& g, const GameConfig& cfg, const SolverOptions& opt = {});

/// cops_win for c cops with the given speed.
SolveResult cops_win(const Graph& g, int c, Speed speed, const SolverOptions& opt = {});

/// Smallest winning c. Inputs with several (weak) components are solved per
/// component and the counts summed; such results carry no table.
SolveResult cop_number(const Graph& g, Speed speed, const SolverOptions& opt = {});

/// Plays the table: winning placement, then rank-decreasing replies. From
/// robber-win states the cops stay put.
class OptimalCops : public CopController {
public:
  explicit OptimalCops(SolveResult result);
  std::string name() const override { return "optimal"; }
  int cop_count() const override { return result_.cop_count; }
  std::vector<Vertex> decide(const Graph& g, const GameState& s, const GameConfig& cfg, int round) override;

private:
  SolveResult result_;
};

/// Avoids cop-win states when possible, otherwise maximises the rank.
/// Ties go to the smallest vertex.
class OptimalRobber : public RobberController {
public:
  explicit OptimalRobber(SolveResult result);
  std::string name() const override { return "optimal"; }
  Vertex decide(const Graph& g, const GameState& s, const GameConfig& cfg, int round) override;

private:
  SolveResult result_;
};

} // namespace pursuit
