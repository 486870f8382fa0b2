#include "pursuit/graph.hpp"

#include <algorithm>
#include <deque>

#include "pursuit/errors.hpp"

namespace pursuit {

namespace {

bool insert_sorted(std::vector<Vertex>& list, Vertex v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it != list.end() && *it == v) return false;
  list.insert(it, v);
  return true;
}

void require_undirected(const Graph& g, const char* op) {
  if (g.directed()) throw InvalidArgument(std::string(op) + " requires an undirected graph");
}

void require_directed(const Graph& g, const char* op) {
  if (!g.directed()) throw InvalidArgument(std::string(op) + " requires a digraph");
}

void check_vertices(const Graph& g, std::span<const Vertex> s) {
  for (Vertex v : s)
    if (v < 0 || v >= g.size()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
}

} // namespace

Graph::Graph(int n, bool directed) : directed_(directed), out_(n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  if (directed) in_.resize(n);
}

Graph Graph::from_edges(int n, bool directed, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(n, directed);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= size() || v >= size())
    throw InvalidArgument("edge endpoint out of range");
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  if (!insert_sorted(out_[u], v)) return false;
  if (directed_)
    insert_sorted(in_[v], u);
  else
    insert_sorted(out_[v], u);
  ++edges_;
  return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

int Graph::max_out_degree() const {
  int d = 0;
  for (const auto& a : out_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edge_list() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v : out_[u])
      if (directed_ || u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::reversed() const {
  if (!directed_) return *this;
  Graph r(size(), true);
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v : out_[u]) r.add_edge(v, u);
  return r;
}

Graph Graph::underlying() const {
  Graph g(size(), false);
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v : out_[u]) g.add_edge(u, v);
  return g;
}

Subgraph induced(const Graph& g, std::span<const Vertex> keep) {
  check_vertices(g, keep);
  Subgraph sub;
  sub.to_parent.assign(keep.begin(), keep.end());
  std::sort(sub.to_parent.begin(), sub.to_parent.end());
  sub.to_parent.erase(std::unique(sub.to_parent.begin(), sub.to_parent.end()), sub.to_parent.end());
  std::vector<int> local(g.size(), -1);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) local[sub.to_parent[i]] = static_cast<int>(i);
  sub.graph = Graph(static_cast<int>(sub.to_parent.size()), g.directed());
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
    for (Vertex w : g.out(sub.to_parent[i]))
      if (local[w] >= 0 && (g.directed() || static_cast<int>(i) < local[w]))
        sub.graph.add_edge(static_cast<int>(i), local[w]);
  return sub;
}

std::vector<int> distances(const Graph& g, std::span<const Vertex> sources, Direction dir, int limit) {
  check_vertices(g, sources);
  std::vector<int> dist(g.size(), -1);
  std::deque<Vertex> queue;
  for (Vertex s : sources)
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (dist[u] >= limit) continue;
    for (Vertex w : g.neighbors(u, dir))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

VertexSet boundary(const Graph& g, std::span<const Vertex> s) {
  require_undirected(g, "boundary");
  check_vertices(g, s);
  VertexMask inside = VertexMask::of(g.size(), s);
  VertexMask out(g.size());
  for (Vertex u : s)
    for (Vertex w : g.out(u))
      if (!inside.test(w)) out.set(w);
  return out.members();
}

VertexSet in_boundary(const Graph& d, std::span<const Vertex> s) {
  require_directed(d, "in_boundary");
  check_vertices(d, s);
  VertexMask inside = VertexMask::of(d.size(), s);
  VertexMask out(d.size());
  for (Vertex u : s)
    for (Vertex w : d.in(u))
      if (!inside.test(w)) out.set(w);
  return out.members();
}

VertexSet ball(const Graph& g, std::span<const Vertex> s, int r, Direction dir) {
  if (r < 0) throw InvalidArgument("ball radius must be nonnegative");
  auto dist = distances(g, s, dir, r);
  VertexSet out;
  for (Vertex v = 0; v < g.size(); ++v)
    if (dist[v] >= 0) out.push_back(v);
  return out;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexMask& allowed) {
  std::vector<VertexSet> comps;
  std::vector<char> seen(g.size(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.size(); ++s) {
    if (seen[s] || !allowed.test(s)) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.out(u))
        if (!seen[w] && allowed.test(w)) {
          seen[w] = 1;
          stack.push_back(w);
        }
      if (g.directed())
        for (Vertex w : g.in(u))
          if (!seen[w] && allowed.test(w)) {
            seen[w] = 1;
            stack.push_back(w);
          }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<VertexSet> components(const Graph& g) {
  require_undirected(g, "components");
  return components_within(g, VertexMask::full(g.size()));
}

std::vector<VertexSet> weak_components(const Graph& g) {
  return components_within(g, VertexMask::full(g.size()));
}

bool is_connected(const Graph& g) {
  return g.size() > 0 && components_within(g, VertexMask::full(g.size())).size() == 1;
}

Condensation strong_components(const Graph& d) {
  require_directed(d, "strong_components");
  const int n = d.size();
  // Iterative Tarjan.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> call;
  int counter = 0, found = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [u, next] = call.back();
      const auto& succ = d.out(u);
      if (next < succ.size()) {
        Vertex w = succ[next++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[u] = std::min(low[u], index[w]);
        }
        continue;
      }
      if (low[u] == index[u]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = found;
        } while (w != u);
        ++found;
      }
      Vertex done = u;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }

  // Renumber parts by smallest member.
  std::vector<int> first(found, n);
  for (Vertex v = 0; v < n; ++v) first[comp[v]] = std::min(first[comp[v]], v);
  std::vector<int> order(found);
  for (int i = 0; i < found; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return first[a] < first[b]; });
  std::vector<int> rank(found);
  for (int i = 0; i < found; ++i) rank[order[i]] = i;

  Condensation c;
  c.parts.resize(found);
  c.part_of.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    c.part_of[v] = rank[comp[v]];
    c.parts[c.part_of[v]].push_back(v);
  }
  c.dag = Graph(found, true);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w : d.out(u))
      if (c.part_of[u] != c.part_of[w]) c.dag.add_edge(c.part_of[u], c.part_of[w]);
  return c;
}

bool is_strongly_connected(const Graph& d) {
  return d.size() > 0 && strong_components(d).parts.size() == 1;
}

std::optional<std::vector<Vertex>> topological_order(const Graph& d) {
  std::vector<int> indeg(d.size(), 0);
  for (Vertex u = 0; u < d.size(); ++u)
    for (Vertex w : d.out(u)) ++indeg[w];
  std::vector<Vertex> order, ready;
  for (Vertex v = d.size() - 1; v >= 0; --v)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    Vertex u = ready.back();
    ready.pop_back();
    order.push_back(u);
    for (Vertex w : d.out(u))
      if (--indeg[w] == 0) ready.push_back(w);
  }
  if (static_cast<int>(order.size()) != d.size()) return std::nullopt;
  return order;
}

VertexSet k_core_within(const Graph& g, const VertexMask& allowed, int k) {
  require_undirected(g, "k_core");
  const int n = g.size();
  std::vector<int> deg(n, 0);
  std::vector<char> alive(n, 0);
  std::vector<Vertex> doomed;
  for (Vertex v = 0; v < n; ++v) alive[v] = allowed.test(v);
  for (Vertex v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (Vertex w : g.out(v)) deg[v] += alive[w];
    if (deg[v] < k) doomed.push_back(v);
  }
  for (Vertex v : doomed) alive[v] = 2;  // queued
  while (!doomed.empty()) {
    Vertex v = doomed.back();
    doomed.pop_back();
    alive[v] = 0;
    for (Vertex w : g.out(v))
      if (alive[w] == 1 && --deg[w] < k) {
        alive[w] = 2;
        doomed.push_back(w);
      }
  }
  VertexSet core;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v] == 1) core.push_back(v);
  return core;
}

VertexSet k_core(const Graph& g, int k) {
  return k_core_within(g, VertexMask::full(g.size()), k);
}

WitnessSearch expansion_witness(const Graph& g, double p, int size_cap) {
  const int n = g.size();
  if (size_cap > full_witness_cap(n))
    throw InvalidArgument("witness size cap " + std::to_string(size_cap) + " exceeds n/2");
  WitnessSearch result;
  result.cap = std::max(size_cap, 0);
  if (size_cap < 1) return result;

  const Direction dir = g.directed() ? Direction::In : Direction::Out;
  std::vector<VertexMask> nbr(n, VertexMask(n));
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v, dir)) nbr[v].set(w);

  // Depth-first over subsets in lexicographic order; level d holds the
  // neighbourhood union and membership of the current d-element prefix.
  std::vector<VertexMask> reach(size_cap + 1, VertexMask(n));
  std::vector<VertexMask> member(size_cap + 1, VertexMask(n));
  std::vector<Vertex> chosen(size_cap + 1, -1);
  VertexMask scratch(n);
  int depth = 0;
  chosen[0] = -1;
  while (depth >= 0) {
    Vertex next = ++chosen[depth];
    if (next >= n || depth == size_cap) {
      --depth;
      continue;
    }
    reach[depth + 1] = reach[depth];
    reach[depth + 1] |= nbr[next];
    member[depth + 1] = member[depth];
    member[depth + 1].set(next);
    ++result.examined;
    scratch = reach[depth + 1];
    scratch.subtract(member[depth + 1]);
    const int size = depth + 1;
    if (scratch.count() <= p * size + 1e-12) {
      result.witness = member[depth + 1].members();
      return result;
    }
    ++depth;
    chosen[depth] = next;
  }
  return result;
}

} // namespace pursuit
