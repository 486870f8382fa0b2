#pragma once

#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pursuit/bits.hpp"

namespace pursuit {

enum class Direction { Out, In };

/// Finite simple graph or digraph on vertices 0..n-1.
///
/// Adjacency lists are kept sorted. Undirected graphs store each edge in both
/// directions, so out() and in() coincide. Digraphs may contain both u->v and
/// v->u, but never a loop or a repeated arc.
class Graph {
public:
  Graph() = default;
  Graph(int n, bool directed);
  static Graph from_edges(int n, bool directed, std::span<const std::pair<Vertex, Vertex>> edges);

  int size() const { return static_cast<int>(out_.size()); }
  bool directed() const { return directed_; }
  // Undirected: number of edges. Directed: number of arcs.
  std::size_t edge_count() const { return edges_; }

  /// Adds u-v (or u->v). Returns false if the edge is already present.
  /// Throws InvalidArgument on a loop or out-of-range endpoint.
  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  const std::vector<Vertex>& out(Vertex v) const { return out_[v]; }
  const std::vector<Vertex>& in(Vertex v) const { return directed_ ? in_[v] : out_[v]; }
  const std::vector<Vertex>& neighbors(Vertex v, Direction d) const {
    return d == Direction::Out ? out(v) : in(v);
  }
  int degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
  int max_out_degree() const;

  std::vector<std::pair<Vertex, Vertex>> edge_list() const;
  Graph reversed() const;
  Graph underlying() const;

  bool operator==(const Graph& o) const {
    return directed_ == o.directed_ && out_ == o.out_;
  }

private:
  bool directed_ = false;
  std::size_t edges_ = 0;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

/// Induced subgraph together with the map back to the parent's identifiers.
struct Subgraph {
  Graph graph;
  VertexSet to_parent;
};

Subgraph induced(const Graph& g, std::span<const Vertex> keep);

inline constexpr int kUnbounded = std::numeric_limits<int>::max();

/// BFS distances from a vertex set; -1 for unreachable. Direction::In measures
/// how far each vertex is from reaching the sources.
std::vector<int> distances(const Graph& g, std::span<const Vertex> sources,
                           Direction dir = Direction::Out, int limit = kUnbounded);

VertexSet boundary(const Graph& g, std::span<const Vertex> s);
VertexSet in_boundary(const Graph& d, std::span<const Vertex> s);

/// Vertices within distance r of s. For digraphs Direction::Out gives the
/// out-ball and Direction::In the set of vertices that reach s within r arcs.
VertexSet ball(const Graph& g, std::span<const Vertex> s, int r, Direction dir = Direction::Out);

std::vector<VertexSet> components(const Graph& g);
// Connected components of g restricted to the vertices set in `allowed`.
std::vector<VertexSet> components_within(const Graph& g, const VertexMask& allowed);

/// Weakly connected parts of a digraph (components of the underlying graph).
std::vector<VertexSet> weak_components(const Graph& g);

struct Condensation {
  std::vector<VertexSet> parts;   // ordered by smallest member
  std::vector<int> part_of;       // vertex -> index into parts
  Graph dag;                      // one vertex per part
};

Condensation strong_components(const Graph& d);

/// Topological order of an acyclic digraph, or nullopt if a cycle exists.
std::optional<std::vector<Vertex>> topological_order(const Graph& d);

VertexSet k_core(const Graph& g, int k);
VertexSet k_core_within(const Graph& g, const VertexMask& allowed, int k);

struct WitnessSearch {
  std::optional<VertexSet> witness;
  int cap = 0;           // largest |S| examined
  long long examined = 0;
};

/// Largest witness size that still fits the expander definition (|S| <= n/2).
inline int full_witness_cap(int n) { return n / 2; }

/// Exhaustive search for S with 1 <= |S| <= size_cap and |dS| <= p|S|, using
/// the in-boundary on digraphs. size_cap above n/2 is rejected. The search is
/// depth-first in lexicographic order, so the result is deterministic.
WitnessSearch expansion_witness(const Graph& g, double p, int size_cap);

bool is_connected(const Graph& g);
bool is_strongly_connected(const Graph& d);

// Text format: "n <count> <directed|undirected>" followed by "u v" lines.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
std::string to_text(const Graph& g);

} // namespace pursuit
