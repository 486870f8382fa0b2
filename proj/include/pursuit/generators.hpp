#pragma once

#include <cstdint>

#include "pursuit/graph.hpp"

namespace pursuit {

/// 1-subdivision of K_n. Joins are 0..n-1; the internal vertex of pair
/// (i, j), i < j, is numbered n + (index of the pair in lexicographic order).
Graph subdivide_complete(int n);

/// G(n, p): pairs visited in lexicographic order, one Bernoulli draw each.
Graph gnp(int n, double p, std::uint64_t seed);

/// Random digraph: every ordered pair (u, v), u != v, is an arc with probability p.
Graph random_digraph(int n, double p, std::uint64_t seed);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n, bool directed = false);
Graph star_graph(int leaves);
Graph petersen_graph();

} // namespace pursuit
