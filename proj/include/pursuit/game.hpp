#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

/// Robber speed: a positive number of edges per move, or unbounded.
class Speed {
public:
  constexpr Speed() = default;
  static constexpr Speed finite(int edges) { return Speed(edges); }
  static constexpr Speed infinite() { return Speed(0); }

  constexpr bool is_infinite() const { return edges_ == 0; }
  // Walk-length limit usable by BFS; kUnbounded for the infinite robber.
  constexpr int limit() const { return is_infinite() ? kUnbounded : edges_; }
  std::string to_string() const;
  static Speed parse(const std::string& text);

  constexpr bool operator==(const Speed&) const = default;
  // Nesting order of robber move sets: 1 < 2 < ... < infinite.
  constexpr bool operator<=(const Speed& o) const {
    return o.is_infinite() || (!is_infinite() && edges_ <= o.edges_);
  }

private:
  constexpr explicit Speed(int edges) : edges_(edges) {}
  int edges_ = 1;
};

struct GameConfig {
  int cop_count = 1;
  Speed speed{};
  bool directed = false;

  void validate(const Graph& g) const;
};

enum class Phase { CopsPlace, RobberPlace, CopsMove, RobberMove, Captured };

const char* to_string(Phase p);
Phase parse_phase(const std::string& s);

inline constexpr Vertex kUnplaced = -1;

/// Cop positions are a sorted multiset. If the cops occupy every vertex at
/// placement the game ends CAPTURED with the robber still unplaced.
struct GameState {
  std::vector<Vertex> cops;
  Vertex robber = kUnplaced;
  Phase phase = Phase::CopsPlace;

  bool operator==(const GameState&) const = default;
};

GameState initial_state();

/// Every multiset reachable by each cop staying or crossing one (out-)edge.
/// Result is sorted and free of duplicates.
std::vector<std::vector<Vertex>> cop_moves(const Graph& g, const GameState& s);

/// Endpoints of cop-free walks of length <= speed from the robber's vertex.
VertexSet robber_moves(const Graph& g, const GameState& s, const GameConfig& cfg);

/// True if `next` can be produced from `cops` by moving each cop at most one edge.
bool is_cop_move(const Graph& g, const std::vector<Vertex>& cops, const std::vector<Vertex>& next);

/// A decision for the current phase: a cop multiset (placement or move) or a
/// robber vertex.
struct Decision {
  std::vector<Vertex> cops;
  Vertex robber = kUnplaced;

  static Decision cop(std::vector<Vertex> positions);
  static Decision rob(Vertex v) { return Decision{{}, v}; }
  bool operator==(const Decision&) const = default;
};

/// Applies one legal transition. Illegal decisions throw IllegalMove naming
/// the violated rule.
GameState step(const Graph& g, const GameState& s, const GameConfig& cfg, const Decision& d);

class CopController {
public:
  virtual ~CopController() = default;
  virtual std::string name() const = 0;
  virtual int cop_count() const = 0;
  virtual void reset(std::uint64_t /*seed*/) {}
  /// Called in CopsPlace (placement) and CopsMove phases.
  virtual std::vector<Vertex> decide(const Graph& g, const GameState& s, const GameConfig& cfg, int round) = 0;
};

class RobberController {
public:
  virtual ~RobberController() = default;
  virtual std::string name() const = 0;
  virtual void reset(std::uint64_t /*seed*/) {}
  /// Called in RobberPlace and RobberMove phases.
  virtual Vertex decide(const Graph& g, const GameState& s, const GameConfig& cfg, int round) = 0;
  /// Evaders report when their strategy's precondition failed.
  virtual bool surrendered() const { return false; }
  virtual std::string status() const { return surrendered() ? "UNSAFE" : "OK"; }
};

enum class Outcome { Captured, Survived, Aborted };
const char* to_string(Outcome o);

struct TraceEntry {
  int round = 0;
  Decision decision;
  GameState state;  // state after applying decision
};

struct Trace {
  GameConfig config;
  std::uint64_t seed = 0;
  int max_rounds = 0;
  std::string cop_controller;
  std::string robber_controller;
  std::vector<TraceEntry> entries;
  Outcome outcome = Outcome::Survived;
  int capture_round = -1;
  std::string diagnostic;     // reason for an abort
  std::string robber_status;  // evader status at the end of play

  const GameState& final_state() const;
};

/// Plays a full game. Round 0 holds both placements; round r >= 1 holds the
/// r-th cop move and the following robber move. Any exception raised by a
/// controller, or an illegal decision, ends play with Outcome::Aborted and the
/// diagnostic message; the trace up to that point is kept.
Trace play(const Graph& g, const GameConfig& cfg, CopController& cops, RobberController& robber,
           int max_rounds, std::uint64_t seed);

/// Re-applies every recorded decision with step() and compares states.
bool replay(const Graph& g, const Trace& t);

// Line records: "round phase c1,c2,... robber" (robber '-' when unplaced).
void write_trace_lines(std::ostream& out, const Trace& t);
std::vector<std::pair<int, GameState>> read_trace_lines(std::istream& in);

} // namespace pursuit
