#pragma once

#include <string>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

enum class TrimKind { Degree, Expansion };
const char* to_string(TrimKind k);

/// One trimming step. Vertex ids refer to the input graph.
struct TrimStep {
  TrimKind kind = TrimKind::Degree;
  Vertex vertex = -1;    // the high-degree vertex (Degree steps)
  VertexSet witness;     // {v} plus out-neighbours, or the expansion witness S
  VertexSet stationed;   // where the step's cops stay: {v}, or the (in-)boundary of S
  VertexSet removed;     // everything that leaves the tracked part
  int cops = 0;
};

struct TrimCertificate {
  double p = 0;
  int witness_cap = 0;
  std::vector<TrimStep> steps;
  VertexSet residual;     // ids in the input graph
  Graph residual_graph;   // induced on `residual`, relabelled 0..m-1
  int total_cops = 0;
  int certified_cap = 0;      // largest witness size searched on the residual
  bool expansion_certified = false;  // the search covered every |S| < m/2
};

/// Strips high-degree vertices and poorly expanding sets from a connected
/// graph (strongly connected digraph). After each step the tracked part is
/// the largest remaining (strong) component, ties to the smallest vertex.
TrimCertificate trim(const Graph& g, double p, int witness_cap);

/// Replays a certificate against g. Returns an empty string when it checks
/// out, else the first failed condition.
std::string check_trim(const Graph& g, const TrimCertificate& cert);

} // namespace pursuit
