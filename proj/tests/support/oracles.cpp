#include "oracles.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "pursuit/rng.hpp"

namespace oracle {

namespace {

void multisets(int n, int c, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == c) {
    out.push_back(cur);
    return;
  }
  for (int v = from; v < n; ++v) {
    cur.push_back(v);
    multisets(n, c, v, cur, out);
    cur.pop_back();
  }
}

void cop_steps(const Graph& g, const std::vector<int>& cops, std::size_t i, std::vector<int>& cur,
               std::set<std::vector<int>>& out) {
  if (i == cops.size()) {
    auto s = cur;
    std::sort(s.begin(), s.end());
    out.insert(s);
    return;
  }
  cur.push_back(cops[i]);
  cop_steps(g, cops, i + 1, cur, out);
  cur.pop_back();
  for (Vertex w : g.out(cops[i])) {
    cur.push_back(w);
    cop_steps(g, cops, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<int> robber_steps(const Graph& g, const std::vector<int>& cops, int r, int limit) {
  std::vector<bool> blocked(g.size(), false);
  for (int c : cops) blocked[c] = true;
  std::vector<int> depth(g.size(), -1);
  std::vector<int> frontier{r}, seen{r};
  depth[r] = 0;
  for (int d = 1; d <= limit && !frontier.empty(); ++d) {
    std::vector<int> next;
    for (int u : frontier)
      for (Vertex w : g.out(u))
        if (!blocked[w] && depth[w] < 0) {
          depth[w] = d;
          next.push_back(w);
          seen.push_back(w);
        }
    frontier = next;
  }
  return seen;
}

} // namespace

bool cops_win(const Graph& g, int c, int limit) {
  const int n = g.size();
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  multisets(n, c, 0, cur, all);
  std::map<std::vector<int>, int> id;
  for (std::size_t i = 0; i < all.size(); ++i) id[all[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> moves(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::set<std::vector<int>> next;
    std::vector<int> tmp;
    cop_steps(g, all[i], 0, tmp, next);
    for (const auto& m : next) moves[i].push_back(id.at(m));
  }
  auto holds = [&](int i, int v) { return std::find(all[i].begin(), all[i].end(), v) != all[i].end(); };
  // cop_turn[i][r]: cops at all[i] to move, robber at r (not on a cop)
  std::vector<std::vector<char>> cop_turn(all.size(), std::vector<char>(n, 0));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < all.size(); ++i)
      for (int r = 0; r < n; ++r) {
        if (cop_turn[i][r] || holds(static_cast<int>(i), r)) continue;
        bool win = false;
        for (int j : moves[i]) {
          if (holds(j, r)) {
            win = true;
            break;
          }
          bool all_lose = true;
          for (int r2 : robber_steps(g, all[j], r, limit))
            if (!cop_turn[j][r2]) {
              all_lose = false;
              break;
            }
          if (all_lose) {
            win = true;
            break;
          }
        }
        if (win) {
          cop_turn[i][r] = 1;
          changed = true;
        }
      }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool ok = true;
    for (int r = 0; r < n && ok; ++r)
      if (!holds(static_cast<int>(i), r) && !cop_turn[i][r]) ok = false;
    if (ok) return true;
  }
  return false;
}

int cop_number(const Graph& g, int limit) {
  for (int c = 1;; ++c)
    if (cops_win(g, c, limit)) return c;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.size(), g.directed());
  for (auto [u, v] : g.edge_list()) h.add_edge(perm[u], perm[v]);
  return h;
}

std::vector<int> random_permutation(int n, std::uint64_t seed) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  pursuit::Rng rng(seed);
  rng.shuffle(std::span<int>(p));
  return p;
}

std::vector<std::uint64_t> canonical_form(const Graph& g) {
  const int n = g.size();
  std::vector<std::pair<int, int>> key(n);
  for (int v = 0; v < n; ++v) key[v] = {static_cast<int>(g.out(v).size()), static_cast<int>(g.in(v).size())};
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
  std::vector<std::pair<int, int>> slot_key(n);
  for (int i = 0; i < n; ++i) slot_key[i] = key[order[i]];
  std::vector<std::uint64_t> best;
  std::vector<int> at(n, -1);  // position -> vertex
  std::vector<bool> used(n, false);
  auto code = [&] {
    std::vector<std::uint64_t> words(1 + (n * n + 63) / 64, 0);
    words[0] = static_cast<std::uint64_t>(n) * 2 + (g.directed() ? 1 : 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && g.has_edge(at[i], at[j])) {
          int bit = i * n + j;
          words[1 + bit / 64] |= std::uint64_t{1} << (bit % 64);
        }
    return words;
  };
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      auto c = code();
      if (best.empty() || c < best) best = c;
      return;
    }
    for (int v = 0; v < n; ++v)
      if (!used[v] && key[v] == slot_key[pos]) {
        used[v] = true;
        at[pos] = v;
        self(self, pos + 1);
        used[v] = false;
      }
  };
  rec(rec, 0);
  if (n == 0) best = {0};
  return best;
}

namespace {

std::vector<Graph> grow(int n, bool directed) {
  std::vector<Graph> level{Graph(1, directed)};
  for (int m = 2; m <= n; ++m) {
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<Graph> next;
    const int old = m - 1;
    const int choices = directed ? 1 << (2 * old) : 1 << old;
    for (const Graph& h : level)
      for (int mask = 1; mask < choices; ++mask) {
        Graph g(m, directed);
        for (auto [u, v] : h.edge_list()) g.add_edge(u, v);
        for (int u = 0; u < old; ++u) {
          if (mask >> u & 1) g.add_edge(old, u);
          if (directed && (mask >> (old + u) & 1)) g.add_edge(u, old);
        }
        if (seen.insert(canonical_form(g)).second) next.push_back(std::move(g));
      }
    level = std::move(next);
  }
  return level;
}

} // namespace

std::vector<Graph> connected_graphs(int n) { return grow(n, false); }
std::vector<Graph> weak_digraphs(int n) { return grow(n, true); }

bool weakly_connected(const Graph& g) {
  const int n = g.size();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v)
      if (!seen[v] && (g.has_edge(u, v) || g.has_edge(v, u))) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n;
}

void doubly_lexical_matrices(int a, int b, const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> rows;
  auto rec = [&](auto&& self, unsigned prev, unsigned tie) -> void {
    if (static_cast<int>(rows.size()) == a) {
      visit(rows);
      return;
    }
    for (int row = static_cast<int>(prev); row >= 0; --row) {
      bool ok = true;
      unsigned nt = tie;
      for (int j = 0; j + 1 < b; ++j)
        if (tie >> j & 1) {
          int cj = row >> (b - 1 - j) & 1, cj1 = row >> (b - 2 - j) & 1;
          if (cj < cj1) {
            ok = false;
            break;
          }
          if (cj > cj1) nt &= ~(1u << j);
        }
      if (!ok) continue;
      rows.push_back(static_cast<unsigned>(row));
      self(self, static_cast<unsigned>(row), nt);
      rows.pop_back();
    }
  };
  rec(rec, (1u << b) - 1, b > 1 ? (1u << (b - 1)) - 1 : 0);
}

int neighbourhood(const std::vector<unsigned>& rows, unsigned subset) {
  unsigned n = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (subset >> i & 1) n |= rows[i];
  return __builtin_popcount(n);
}

int boundary_size(const Graph& g, const std::vector<bool>& in_s, bool in_direction) {
  int count = 0;
  for (int v = 0; v < g.size(); ++v) {
    if (in_s[v]) continue;
    bool touches = false;
    for (int u = 0; u < g.size() && !touches; ++u)
      if (in_s[u] && (in_direction ? g.has_edge(v, u) : g.has_edge(u, v))) touches = true;
    if (touches) ++count;
  }
  return count;
}

double min_expansion(const Graph& g, int cap, bool in_direction) {
  const int n = g.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size > cap) continue;
    std::vector<bool> in_s(n);
    for (int v = 0; v < n; ++v) in_s[v] = mask >> v & 1;
    best = std::min(best, static_cast<double>(boundary_size(g, in_s, in_direction)) / size);
  }
  return best;
}

std::vector<int> bellman_distances(const Graph& g, Vertex from) {
  const int n = g.size();
  const int inf = std::numeric_limits<int>::max();
  std::vector<int> d(n, inf);
  d[from] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [u, v] : g.edge_list()) {
      if (d[u] != inf && d[u] + 1 < d[v]) d[v] = d[u] + 1, changed = true;
      if (!g.directed() && d[v] != inf && d[v] + 1 < d[u]) d[u] = d[v] + 1, changed = true;
    }
  }
  for (int& x : d)
    if (x == inf) x = -1;
  return d;
}

Graph random_connected(int n, double p, std::uint64_t seed) {
  pursuit::Rng rng(seed);
  Graph g(n, false);
  auto perm = random_permutation(n, pursuit::derive_seed(seed, 9));
  for (int i = 1; i < n; ++i) g.add_edge(perm[i], perm[rng.below(i)]);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

} // namespace oracle
