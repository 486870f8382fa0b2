#pragma once

#include <optional>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

/// Bipartite graph with left side 0..left-1 and right side 0..right-1.
struct Bipartite {
  int left = 0;
  int right = 0;
  std::vector<std::vector<int>> adj;  // left -> sorted right neighbours

  Bipartite() = default;
  Bipartite(int l, int r) : left(l), right(r), adj(l) {}
  void add(int a, int b) { adj[a].push_back(b); }
  // |N(U)| for a set of left vertices
  int neighbourhood_size(const std::vector<int>& u) const;
};

/// S collects left vertices until no U inside the rest has |N(U)| < k|U|.
/// Then |N(S)| <= k|S| and every U in T has |N(U)| >= k|U|.
struct BipartitePartition {
  std::vector<int> s;
  std::vector<int> t;
};

BipartitePartition split_hall(const Bipartite& b, double k);

/// Left subset with the largest k|U| - |N(U)|, or nullopt if none is positive.
std::optional<std::vector<int>> most_deficient(const Bipartite& b, const std::vector<int>& left_subset, double k);

struct Matching {
  std::vector<int> mate;          // left -> right, -1 if unmatched
  std::vector<int> deficient;     // when some left vertex is unmatched: U with |N(U)| < |U|
  bool complete() const { return deficient.empty(); }
};

/// Maximum matching saturating the left side, or a Hall violator.
Matching match_left(const Bipartite& b);

struct Route {
  std::vector<std::pair<Vertex, Vertex>> assignment;  // (target, cop), targets ascending
  VertexSet deficient;  // targets whose radius-r in-ball holds fewer cops than targets
  bool ok() const { return deficient.empty(); }
};

/// Injective target -> cop assignment with every cop able to reach its target
/// within r moves (following arc directions on digraphs).
Route hall_route(const Graph& g, const VertexSet& cops, const VertexSet& targets, int r);

/// Rational p/q close to x with q <= max_den (continued fractions).
std::pair<long long, long long> rational_approx(double x, long long max_den);

} // namespace pursuit
