#pragma once

// Independent reference implementations used only by tests. Nothing here
// calls into the solver, the matcher or the flow code it is checking.

#include <cstdint>
#include <functional>
#include <vector>

#include "pursuit/game.hpp"
#include "pursuit/graph.hpp"

namespace oracle {

using pursuit::Graph;
using pursuit::Vertex;
using pursuit::VertexSet;

// Plain fixed-point iteration over an explicit state map.
bool cops_win(const Graph& g, int cops, int speed_limit);
int cop_number(const Graph& g, int speed_limit);

Graph relabel(const Graph& g, const std::vector<int>& perm);  // vertex v becomes perm[v]
std::vector<int> random_permutation(int n, std::uint64_t seed);

// Smallest adjacency bit string over vertex orders that respect degree classes.
std::vector<std::uint64_t> canonical_form(const Graph& g);

// Up to isomorphism, by adding one vertex at a time.
std::vector<Graph> connected_graphs(int n);
std::vector<Graph> weak_digraphs(int n);

bool weakly_connected(const Graph& g);

// Rows are left vertices, bit (b-1-j) of a row is the edge to right vertex j.
// Visits every a x b 0/1 matrix whose rows and columns are both in
// non-increasing lexicographic order: one per isomorphism class at least.
void doubly_lexical_matrices(int a, int b, const std::function<void(const std::vector<unsigned>&)>& visit);

// Neighbourhood size of a left subset given as a bit mask.
int neighbourhood(const std::vector<unsigned>& rows, unsigned subset);

// Edge-by-edge boundary counts; brute force over all subsets.
int boundary_size(const Graph& g, const std::vector<bool>& in_s, bool in_direction);
// Smallest |boundary|/|S| over 1 <= |S| <= cap; +inf when there is none.
double min_expansion(const Graph& g, int cap, bool in_direction);

// BFS distance by edge relaxation until nothing changes.
std::vector<int> bellman_distances(const Graph& g, Vertex from);

// Random graph with edge probability p, forced connected by a random spanning tree.
Graph random_connected(int n, double p, std::uint64_t seed);

} // namespace oracle
