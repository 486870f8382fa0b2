#include "pursuit/hall.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "pursuit/errors.hpp"

namespace pursuit {

namespace {

// Dinic's algorithm on an explicit edge list.
class MaxFlow {
public:
  explicit MaxFlow(int n) : head_(n, -1), level_(n), it_(n) {}

  void add(int u, int v, long long cap) {
    edges_.push_back({v, head_[u], cap});
    head_[u] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({u, head_[v], 0});
    head_[v] = static_cast<int>(edges_.size()) - 1;
  }

  long long run(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
      it_ = head_;
      while (long long f = dfs(s, t, std::numeric_limits<long long>::max())) total += f;
    }
    return total;
  }

  // Vertices reachable from s in the residual graph after run().
  std::vector<bool> source_side(int s) const {
    std::vector<bool> seen(head_.size(), false);
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e = head_[u]; e >= 0; e = edges_[e].next)
        if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
          seen[edges_[e].to] = true;
          stack.push_back(edges_[e].to);
        }
    }
    return seen;
  }

private:
  struct Edge {
    int to, next;
    long long cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int e = head_[u]; e >= 0; e = edges_[e].next)
        if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
          level_[edges_[e].to] = level_[u] + 1;
          q.push(edges_[e].to);
        }
    }
    return level_[t] >= 0;
  }

  long long dfs(int u, int t, long long f) {
    if (u == t) return f;
    for (int& e = it_[u]; e >= 0; e = edges_[e].next) {
      Edge& ed = edges_[e];
      if (ed.cap > 0 && level_[ed.to] == level_[u] + 1)
        if (long long got = dfs(ed.to, t, std::min(f, ed.cap))) {
          ed.cap -= got;
          edges_[e ^ 1].cap += got;
          return got;
        }
    }
    return 0;
  }

  std::vector<Edge> edges_;
  std::vector<int> head_, level_, it_;
};

} // namespace

int Bipartite::neighbourhood_size(const std::vector<int>& u) const {
  std::vector<bool> hit(right, false);
  int count = 0;
  for (int a : u)
    for (int b : adj[a])
      if (!hit[b]) {
        hit[b] = true;
        ++count;
      }
  return count;
}

std::pair<long long, long long> rational_approx(double x, long long max_den) {
  if (!(x >= 0) || !std::isfinite(x)) throw InvalidArgument("rational_approx needs a finite nonnegative value");
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double v = x;
  for (int iter = 0; iter < 64; ++iter) {
    double a = std::floor(v);
    if (a > 1e15) break;
    long long ai = static_cast<long long>(a);
    long long q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    long long p2 = ai * p1 + p0;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
    double frac = v - a;
    if (frac < 1e-12) break;
    v = 1.0 / frac;
  }
  if (q1 == 0) return {static_cast<long long>(std::llround(x)), 1};
  return {p1, q1};
}

std::optional<std::vector<int>> most_deficient(const Bipartite& b, const std::vector<int>& left_subset, double k) {
  if (!(k > 0)) throw InvalidArgument("split_hall needs k > 0");
  if (left_subset.empty()) return std::nullopt;
  auto [num, den] = rational_approx(k, 1 << 20);
  if (num == 0) return std::nullopt;
  // cut(U) = num*|A\U| + den*|N(U)|; a set is deficient iff den*|N(U)| < num*|U|.
  const int a_count = static_cast<int>(left_subset.size());
  const int src = 0, sink = 1, a0 = 2, b0 = 2 + a_count;
  MaxFlow flow(b0 + b.right);
  const long long inf = num * (static_cast<long long>(a_count) + 1) + 1;
  std::vector<bool> used(b.right, false);
  for (int i = 0; i < a_count; ++i) {
    flow.add(src, a0 + i, num);
    for (int r : b.adj[left_subset[i]]) {
      flow.add(a0 + i, b0 + r, inf);
      used[r] = true;
    }
  }
  for (int r = 0; r < b.right; ++r)
    if (used[r]) flow.add(b0 + r, sink, den);
  long long cut = flow.run(src, sink);
  if (cut >= num * a_count) return std::nullopt;
  auto side = flow.source_side(src);
  std::vector<int> u;
  for (int i = 0; i < a_count; ++i)
    if (side[a0 + i]) u.push_back(left_subset[i]);
  return u;
}

BipartitePartition split_hall(const Bipartite& b, double k) {
  std::vector<int> rest(b.left);
  for (int i = 0; i < b.left; ++i) rest[i] = i;
  std::vector<int> s;
  while (auto u = most_deficient(b, rest, k)) {
    std::vector<int> keep;
    std::set_difference(rest.begin(), rest.end(), u->begin(), u->end(), std::back_inserter(keep));
    s.insert(s.end(), u->begin(), u->end());
    rest = std::move(keep);
  }
  std::sort(s.begin(), s.end());
  // Hand back to T whatever it can absorb, lowest id first.
  auto [num, den] = rational_approx(k, 1 << 20);
  for (std::size_t i = 0; i < s.size();) {
    std::vector<int> t2 = rest, s2 = s;
    t2.insert(std::upper_bound(t2.begin(), t2.end(), s[i]), s[i]);
    s2.erase(s2.begin() + static_cast<std::ptrdiff_t>(i));
    if (den * b.neighbourhood_size(s2) <= num * static_cast<long long>(s2.size()) && !most_deficient(b, t2, k)) {
      s = std::move(s2);
      rest = std::move(t2);
    } else {
      ++i;
    }
  }
  return BipartitePartition{std::move(s), std::move(rest)};
}

Matching match_left(const Bipartite& b) {
  Matching m;
  m.mate.assign(b.left, -1);
  std::vector<int> owner(b.right, -1);
  std::vector<int> seen(b.right, -1);
  // Kuhn's algorithm, recursive on the right side's owners.
  auto augment = [&](auto&& self, int a, int stamp) -> bool {
    for (int r : b.adj[a]) {
      if (seen[r] == stamp) continue;
      seen[r] = stamp;
      if (owner[r] < 0 || self(self, owner[r], stamp)) {
        owner[r] = a;
        m.mate[a] = r;
        return true;
      }
    }
    return false;
  };
  int failed = -1;
  for (int a = 0; a < b.left; ++a)
    if (!augment(augment, a, a)) {
      failed = a;
      break;
    }
  if (failed < 0) return m;
  // Left vertices reachable from the failed one by alternating paths: their
  // neighbourhood is matched inside the set, one short of its size.
  std::vector<bool> in_u(b.left, false), hit(b.right, false);
  std::vector<int> stack{failed};
  in_u[failed] = true;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int r : b.adj[a]) {
      if (hit[r]) continue;
      hit[r] = true;
      int o = owner[r];
      if (o >= 0 && !in_u[o]) {
        in_u[o] = true;
        stack.push_back(o);
      }
    }
  }
  for (int a = 0; a < b.left; ++a)
    if (in_u[a]) m.deficient.push_back(a);
  return m;
}

Route hall_route(const Graph& g, const VertexSet& cops, const VertexSet& targets, int r) {
  if (r < 0) throw InvalidArgument("route radius must be nonnegative");
  Bipartite b(static_cast<int>(targets.size()), static_cast<int>(cops.size()));
  std::vector<int> cop_slot(g.size(), -1);
  for (std::size_t j = 0; j < cops.size(); ++j) {
    if (cops[j] < 0 || cops[j] >= g.size()) throw InvalidArgument("cop vertex out of range");
    cop_slot[cops[j]] = static_cast<int>(j);
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    Vertex t[] = {targets[i]};
    for (Vertex v : ball(g, t, r, Direction::In))
      if (cop_slot[v] >= 0) b.add(static_cast<int>(i), cop_slot[v]);
  }
  Matching m = match_left(b);
  Route route;
  if (!m.complete()) {
    for (int a : m.deficient) route.deficient.push_back(targets[a]);
    std::sort(route.deficient.begin(), route.deficient.end());
    return route;
  }
  for (std::size_t i = 0; i < targets.size(); ++i) route.assignment.emplace_back(targets[i], cops[m.mate[i]]);
  return route;
}

} // namespace pursuit
