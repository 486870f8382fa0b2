#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "pursuit/graph.hpp"

namespace pursuit {

enum class ValidationMode { Exhaustive, Sampled };
enum class Verdict { Holds, Violated, HoldsUpToCap };

std::string to_string(ValidationMode m);
std::string to_string(Verdict v);
ValidationMode parse_mode(const std::string& s);

struct ValidationOptions {
  ValidationMode mode = ValidationMode::Sampled;
  int cap = 3;          // exhaustive: largest subset size enumerated
  int trials = 10000;   // sampled: subsets drawn
  std::uint64_t seed = 0;
};

struct ValidatorReport {
  std::string property;
  ValidationMode mode = ValidationMode::Sampled;
  int cap = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  Verdict verdict = Verdict::Holds;
  VertexSet witness;
  VertexSet witness_other;  // pair-connect only
  std::map<std::string, double> params;
  double worst_ratio = 0;   // largest observed value / bound (pair-connect: 1 on a violation)
  std::int64_t examined = 0;
};

// Plain recomputations on one set.
std::int64_t induced_edges(const Graph& g, const VertexSet& s);
std::int64_t covered_edges(const Graph& g, const VertexSet& s);
std::int64_t cross_edges(const Graph& g, const VertexSet& a, const VertexSet& b);
// Vertices outside u with at least `threshold` neighbours in u.
int spread_count(const Graph& g, const VertexSet& u, double threshold);

/// Sets of at most s_max vertices have induced average degree <= bound.
ValidatorReport validate_subset_avg_degree(const Graph& g, int s_max, double bound, const ValidationOptions& opt);
/// Sets of `size` vertices cover at most bound_per_vertex * size edges.
ValidatorReport validate_cover(const Graph& g, int size, double bound_per_vertex, const ValidationOptions& opt);
/// Every two disjoint sets of s0 vertices are joined by an edge.
ValidatorReport validate_pair_connect(const Graph& g, int s0, const ValidationOptions& opt);
/// Sets of s <= s0 vertices span at most factor * s * ln n edges.
ValidatorReport validate_span_few(const Graph& g, int s0, double factor, const ValidationOptions& opt);
/// For gamma*np <= t <= gamma^3/(2e^5) n, sets U of t vertices have at most
/// 3t/(gamma*np) outside vertices with gamma*np neighbours in U.
ValidatorReport validate_degree_spread(const Graph& g, double gamma, double np, const ValidationOptions& opt);
/// Every degree lies in [lo, hi]. Always exhaustive.
ValidatorReport validate_degree_range(const Graph& g, double lo, double hi);
/// At least min_edges edges. Always exhaustive.
ValidatorReport validate_edge_count(const Graph& g, double min_edges);

/// Recomputes a VIOLATED report's witness from scratch. True if it violates.
bool recheck_witness(const Graph& g, const ValidatorReport& r);

} // namespace pursuit
