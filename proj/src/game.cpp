#include "pursuit/game.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "pursuit/errors.hpp"
#include "pursuit/rng.hpp"

namespace pursuit {

std::string Speed::to_string() const { return is_infinite() ? "inf" : std::to_string(edges_); }

Speed Speed::parse(const std::string& text) {
  if (text == "inf" || text == "infinite" || text == "oo") return infinite();
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || v < 1) throw InvalidArgument("speed must be a positive integer or 'inf', got '" + text + "'");
  return finite(v);
}

void GameConfig::validate(const Graph& g) const {
  if (cop_count < 1) throw InvalidArgument("cop count must be at least 1");
  if (directed != g.directed()) throw InvalidArgument("directed flag does not match the graph");
  if (g.size() < 1) throw InvalidArgument("graph has no vertices");
}

const char* to_string(Phase p) {
  switch (p) {
  case Phase::CopsPlace: return "COPS_PLACE";
  case Phase::RobberPlace: return "ROBBER_PLACE";
  case Phase::CopsMove: return "COPS_MOVE";
  case Phase::RobberMove: return "ROBBER_MOVE";
  case Phase::Captured: return "CAPTURED";
  }
  return "?";
}

Phase parse_phase(const std::string& s) {
  for (Phase p : {Phase::CopsPlace, Phase::RobberPlace, Phase::CopsMove, Phase::RobberMove, Phase::Captured})
    if (s == to_string(p)) return p;
  throw InvalidArgument("unknown phase '" + s + "'");
}

const char* to_string(Outcome o) {
  switch (o) {
  case Outcome::Captured: return "CAPTURED";
  case Outcome::Survived: return "SURVIVED";
  case Outcome::Aborted: return "ABORTED";
  }
  return "?";
}

GameState initial_state() { return GameState{}; }

Decision Decision::cop(std::vector<Vertex> positions) {
  std::sort(positions.begin(), positions.end());
  return Decision{std::move(positions), kUnplaced};
}

namespace {

void require_phase(const GameState& s, Phase want, const char* op) {
  if (s.phase != want)
    throw IllegalMove(std::string(op) + " called in phase " + to_string(s.phase) + ", expected " + to_string(want));
}

bool occupied(const std::vector<Vertex>& cops, Vertex v) {
  return std::binary_search(cops.begin(), cops.end(), v);
}

// Multisets of size m over options[from..].
void multisets_over(const std::vector<Vertex>& options, std::size_t from, int m, std::vector<Vertex>& cur,
                    std::vector<std::vector<Vertex>>& out) {
  if (m == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < options.size(); ++i) {
    cur.push_back(options[i]);
    multisets_over(options, i, m - 1, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<std::vector<Vertex>> cop_moves(const Graph& g, const GameState& s) {
  require_phase(s, Phase::CopsMove, "cop_moves");
  // Group identical cops: a vertex holding m cops contributes multisets of size m.
  std::vector<std::vector<std::vector<Vertex>>> groups;
  for (std::size_t i = 0; i < s.cops.size();) {
    std::size_t j = i;
    while (j < s.cops.size() && s.cops[j] == s.cops[i]) ++j;
    Vertex u = s.cops[i];
    std::vector<Vertex> options{u};
    options.insert(options.end(), g.out(u).begin(), g.out(u).end());
    std::vector<std::vector<Vertex>> sets;
    std::vector<Vertex> cur;
    multisets_over(options, 0, static_cast<int>(j - i), cur, sets);
    groups.push_back(std::move(sets));
    i = j;
  }
  std::vector<std::vector<Vertex>> result{{}};
  for (const auto& sets : groups) {
    std::vector<std::vector<Vertex>> next;
    next.reserve(result.size() * sets.size());
    for (const auto& partial : result)
      for (const auto& add : sets) {
        auto combined = partial;
        combined.insert(combined.end(), add.begin(), add.end());
        next.push_back(std::move(combined));
      }
    result = std::move(next);
  }
  for (auto& m : result) std::sort(m.begin(), m.end());
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

VertexSet robber_moves(const Graph& g, const GameState& s, const GameConfig& cfg) {
  require_phase(s, Phase::RobberMove, "robber_moves");
  if (s.robber == kUnplaced || occupied(s.cops, s.robber))
    throw IllegalMove("robber_moves requires an uncaptured robber");
  VertexMask blocked = VertexMask::of(g.size(), s.cops);
  std::vector<int> dist(g.size(), -1);
  std::vector<Vertex> frontier{s.robber}, next;
  dist[s.robber] = 0;
  const int limit = cfg.speed.limit();
  for (int depth = 0; depth < limit && !frontier.empty(); ++depth) {
    next.clear();
    for (Vertex u : frontier)
      for (Vertex w : g.out(u))
        if (dist[w] < 0 && !blocked.test(w)) {
          dist[w] = depth + 1;
          next.push_back(w);
        }
    std::swap(frontier, next);
  }
  VertexSet out;
  for (Vertex v = 0; v < g.size(); ++v)
    if (dist[v] >= 0) out.push_back(v);
  return out;
}

bool is_cop_move(const Graph& g, const std::vector<Vertex>& cops, const std::vector<Vertex>& next) {
  if (cops.size() != next.size()) return false;
  const std::size_t c = cops.size();
  std::map<Vertex, std::vector<int>> at;
  for (std::size_t j = 0; j < c; ++j) {
    if (next[j] < 0 || next[j] >= g.size()) return false;
    at[next[j]].push_back(static_cast<int>(j));
  }
  std::vector<std::vector<int>> cand(c);
  for (std::size_t i = 0; i < c; ++i) {
    auto add = [&](Vertex v) {
      auto it = at.find(v);
      if (it != at.end()) cand[i].insert(cand[i].end(), it->second.begin(), it->second.end());
    };
    add(cops[i]);
    for (Vertex w : g.out(cops[i])) add(w);
    if (cand[i].empty()) return false;
  }
  // Kuhn's augmenting paths.
  std::vector<int> match_new(c, -1);
  std::vector<int> seen(c, -1);
  std::vector<std::pair<int, std::size_t>> stack;
  for (std::size_t root = 0; root < c; ++root) {
    // iterative DFS over old cops
    std::vector<int> via(c, -1);  // old cop -> new slot used to reach it
    stack.clear();
    stack.emplace_back(static_cast<int>(root), 0);
    seen[root] = static_cast<int>(root);
    bool done = false;
    while (!stack.empty() && !done) {
      auto& [i, k] = stack.back();
      if (k == cand[i].size()) {
        stack.pop_back();
        continue;
      }
      int j = cand[i][k++];
      if (match_new[j] < 0) {
        // augment along the stack
        int slot = j;
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
          int old = it->first;
          int prev = via[old];
          match_new[slot] = old;
          slot = prev;
          if (slot < 0) break;
        }
        done = true;
      } else if (seen[match_new[j]] != static_cast<int>(root)) {
        int old = match_new[j];
        seen[old] = static_cast<int>(root);
        via[old] = j;
        stack.emplace_back(old, 0);
      }
    }
    if (!done) return false;
  }
  return true;
}

GameState step(const Graph& g, const GameState& s, const GameConfig& cfg, const Decision& d) {
  GameState t = s;
  auto check_vertex = [&](Vertex v, const char* who) {
    if (v < 0 || v >= g.size())
      throw IllegalMove(std::string(who) + " vertex " + std::to_string(v) + " is not in the graph");
  };
  switch (s.phase) {
  case Phase::Captured:
    throw IllegalMove("game is over: robber already captured");
  case Phase::CopsPlace: {
    if (static_cast<int>(d.cops.size()) != cfg.cop_count)
      throw IllegalMove("cop placement must place exactly " + std::to_string(cfg.cop_count) + " cops");
    for (Vertex v : d.cops) check_vertex(v, "cop");
    t.cops = d.cops;
    std::sort(t.cops.begin(), t.cops.end());
    VertexMask covered = VertexMask::of(g.size(), t.cops);
    t.phase = covered.count() == g.size() ? Phase::Captured : Phase::RobberPlace;
    return t;
  }
  case Phase::RobberPlace:
    check_vertex(d.robber, "robber");
    t.robber = d.robber;
    t.phase = occupied(t.cops, d.robber) ? Phase::Captured : Phase::CopsMove;
    return t;
  case Phase::CopsMove: {
    auto next = d.cops;
    std::sort(next.begin(), next.end());
    if (!is_cop_move(g, s.cops, next))
      throw IllegalMove("each cop must stay or cross a single edge");
    t.cops = std::move(next);
    t.phase = occupied(t.cops, t.robber) ? Phase::Captured : Phase::RobberMove;
    return t;
  }
  case Phase::RobberMove: {
    check_vertex(d.robber, "robber");
    auto moves = robber_moves(g, s, cfg);
    if (!std::binary_search(moves.begin(), moves.end(), d.robber))
      throw IllegalMove("robber must end a cop-free walk of length at most " + cfg.speed.to_string() +
                        " (target " + std::to_string(d.robber) + ")");
    t.robber = d.robber;
    t.phase = Phase::CopsMove;
    return t;
  }
  }
  throw IllegalMove("unknown phase");
}

const GameState& Trace::final_state() const {
  static const GameState start{};
  return entries.empty() ? start : entries.back().state;
}

Trace play(const Graph& g, const GameConfig& cfg, CopController& cops, RobberController& robber, int max_rounds,
           std::uint64_t seed) {
  Trace t;
  t.config = cfg;
  t.seed = seed;
  t.max_rounds = max_rounds;
  t.cop_controller = cops.name();
  t.robber_controller = robber.name();
  GameState s = initial_state();
  auto apply = [&](int round, Decision d) {
    s = step(g, s, cfg, d);
    t.entries.push_back(TraceEntry{round, std::move(d), s});
  };
  auto finish_capture = [&](int round) {
    t.outcome = Outcome::Captured;
    t.capture_round = round;
  };
  try {
    cfg.validate(g);
    if (cops.cop_count() != cfg.cop_count)
      throw InvalidArgument("controller " + cops.name() + " fields " + std::to_string(cops.cop_count()) +
                            " cops but the game has " + std::to_string(cfg.cop_count));
    cops.reset(derive_seed(seed, 1));
    robber.reset(derive_seed(seed, 2));
    apply(0, Decision::cop(cops.decide(g, s, cfg, 0)));
    if (s.phase == Phase::Captured) {
      finish_capture(0);
    } else {
      apply(0, Decision::rob(robber.decide(g, s, cfg, 0)));
      if (s.phase == Phase::Captured) finish_capture(0);
    }
    for (int round = 1; round <= max_rounds && s.phase != Phase::Captured; ++round) {
      apply(round, Decision::cop(cops.decide(g, s, cfg, round)));
      if (s.phase == Phase::Captured) {
        finish_capture(round);
        break;
      }
      apply(round, Decision::rob(robber.decide(g, s, cfg, round)));
    }
  } catch (const IllegalMove& e) {
    t.outcome = Outcome::Aborted;
    t.diagnostic = std::string("illegal move: ") + e.what();
  } catch (const std::exception& e) {
    t.outcome = Outcome::Aborted;
    t.diagnostic = e.what();
  }
  t.robber_status = robber.status();
  return t;
}

bool replay(const Graph& g, const Trace& t) {
  GameState s = initial_state();
  try {
    for (const auto& e : t.entries) {
      s = step(g, s, t.config, e.decision);
      if (!(s == e.state)) return false;
    }
  } catch (const IllegalMove&) {
    return false;
  }
  return true;
}

void write_trace_lines(std::ostream& out, const Trace& t) {
  for (const auto& e : t.entries) {
    out << e.round << ' ' << to_string(e.state.phase) << ' ';
    for (std::size_t i = 0; i < e.state.cops.size(); ++i) out << (i ? "," : "") << e.state.cops[i];
    if (e.state.cops.empty()) out << '-';
    out << ' ';
    if (e.state.robber == kUnplaced)
      out << '-';
    else
      out << e.state.robber;
    out << '\n';
  }
}

std::vector<std::pair<int, GameState>> read_trace_lines(std::istream& in) {
  std::vector<std::pair<int, GameState>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream f(line);
    int round = 0;
    std::string phase, cops, rob;
    if (!(f >> round >> phase >> cops >> rob)) throw ParseError(lineno, "expected 'round phase cops robber'");
    GameState s;
    s.phase = parse_phase(phase);
    if (cops != "-") {
      std::istringstream c(cops);
      std::string tok;
      while (std::getline(c, tok, ',')) s.cops.push_back(std::stoi(tok));
    }
    s.robber = rob == "-" ? kUnplaced : std::stoi(rob);
    out.emplace_back(round, std::move(s));
  }
  return out;
}

} // namespace pursuit
