#include "pursuit/generators.hpp"

#include "pursuit/errors.hpp"
#include "pursuit/rng.hpp"

namespace pursuit {

Graph subdivide_complete(int n) {
  if (n < 3) throw InvalidArgument("subdivide_complete needs n >= 3");
  Graph g(n + n * (n - 1) / 2, false);
  int next = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      g.add_edge(i, next);
      g.add_edge(next, j);
      ++next;
    }
  return g;
}

Graph gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InvalidArgument("gnp needs n >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("gnp needs 0 <= p <= 1");
  Graph g(n, false);
  Rng rng(seed);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) g.add_edge(i, j);
  return g;
}

Graph random_digraph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InvalidArgument("random_digraph needs n >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("random_digraph needs 0 <= p <= 1");
  Graph g(n, true);
  Rng rng(seed);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rng.bernoulli(p)) g.add_edge(i, j);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n, false);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph path_graph(int n) {
  Graph g(n, false);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n, bool directed) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  Graph g(n, directed);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1, false);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph petersen_graph() {
  Graph g(10, false);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

} // namespace pursuit
