#include "pursuit/trim.hpp"

#include <algorithm>
#include <cmath>

#include "pursuit/errors.hpp"

namespace pursuit {

const char* to_string(TrimKind k) { return k == TrimKind::Degree ? "DEGREE" : "EXPANSION"; }

namespace {

constexpr double kTol = 1e-12;

bool heavy(int degree, double p) { return degree * p >= 1.0 - kTol; }

// Largest (strong) component among `alive`, as ids of g.
VertexSet largest_part(const Graph& g, const VertexMask& alive) {
  std::vector<VertexSet> parts;
  if (g.directed()) {
    Subgraph sub = induced(g, alive.members());
    for (auto& part : strong_components(sub.graph).parts) {
      VertexSet mapped;
      for (Vertex v : part) mapped.push_back(sub.to_parent[v]);
      std::sort(mapped.begin(), mapped.end());
      parts.push_back(std::move(mapped));
    }
  } else {
    parts = components_within(g, alive);
  }
  VertexSet best;
  for (auto& part : parts)
    if (part.size() > best.size() || (part.size() == best.size() && !part.empty() && part.front() < best.front()))
      best = std::move(part);
  return best;
}

int witness_limit(int m, int requested) {
  int strict = (m + 1) / 2 - 1;  // largest size strictly below m/2
  return std::max(0, std::min(requested, strict));
}

} // namespace

TrimCertificate trim(const Graph& g, double p, int witness_cap) {
  if (!(p > 0 && p < 1)) throw InvalidArgument("trim needs 0 < p < 1");
  if (witness_cap < 0) throw InvalidArgument("witness cap must be nonnegative");
  if (g.directed() ? !is_strongly_connected(g) : !is_connected(g))
    throw InvalidArgument(g.directed() ? "trim needs a strongly connected digraph" : "trim needs a connected graph");

  TrimCertificate cert;
  cert.p = p;
  cert.witness_cap = witness_cap;
  VertexSet current(g.size());
  for (Vertex v = 0; v < g.size(); ++v) current[v] = v;

  auto advance = [&](TrimStep step, const VertexMask& alive) {
    VertexSet next = largest_part(g, alive);
    VertexMask keep = VertexMask::of(g.size(), next);
    for (Vertex v : current)
      if (!keep.test(v)) step.removed.push_back(v);
    cert.total_cops += step.cops;
    cert.steps.push_back(std::move(step));
    current = std::move(next);
  };

  while (!current.empty()) {
    Subgraph sub = induced(g, current);
    const Graph& h = sub.graph;
    Vertex top = -1;
    for (Vertex v = 0; v < h.size(); ++v)
      if (top < 0 || h.degree(v) > h.degree(top)) top = v;
    if (heavy(h.degree(top), p)) {
      TrimStep step;
      step.kind = TrimKind::Degree;
      step.vertex = sub.to_parent[top];
      step.witness.push_back(step.vertex);
      for (Vertex w : h.out(top)) step.witness.push_back(sub.to_parent[w]);
      std::sort(step.witness.begin(), step.witness.end());
      step.stationed = {step.vertex};
      step.cops = 1;
      VertexMask alive = VertexMask::of(g.size(), current);
      for (Vertex v : step.witness) alive.reset(v);
      advance(std::move(step), alive);
      continue;
    }
    const int m = h.size();
    const int cap = witness_limit(m, witness_cap);
    WitnessSearch found = cap > 0 ? expansion_witness(h, p, cap) : WitnessSearch{};
    if (!found.witness) {
      cert.certified_cap = cap;
      cert.expansion_certified = cap >= witness_limit(m, m);
      break;
    }
    TrimStep step;
    step.kind = TrimKind::Expansion;
    VertexSet local_boundary = h.directed() ? in_boundary(h, *found.witness) : boundary(h, *found.witness);
    for (Vertex v : *found.witness) step.witness.push_back(sub.to_parent[v]);
    for (Vertex v : local_boundary) step.stationed.push_back(sub.to_parent[v]);
    step.cops = static_cast<int>(step.stationed.size());
    VertexMask alive = VertexMask::of(g.size(), current);
    for (Vertex v : step.stationed) alive.reset(v);
    advance(std::move(step), alive);
  }
  if (current.empty()) {
    cert.expansion_certified = true;
    cert.certified_cap = 0;
  }
  cert.residual = current;
  cert.residual_graph = induced(g, current).graph;
  return cert;
}

std::string check_trim(const Graph& g, const TrimCertificate& cert) {
  VertexSet current(g.size());
  for (Vertex v = 0; v < g.size(); ++v) current[v] = v;
  int total = 0;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const TrimStep& s = cert.steps[i];
    const std::string at = "step " + std::to_string(i) + ": ";
    Subgraph sub = induced(g, current);
    std::vector<Vertex> local(g.size(), -1);
    for (std::size_t j = 0; j < sub.to_parent.size(); ++j) local[sub.to_parent[j]] = static_cast<Vertex>(j);
    auto to_local = [&](const VertexSet& vs, VertexSet& out) {
      for (Vertex v : vs) {
        if (v < 0 || v >= g.size() || local[v] < 0) return false;
        out.push_back(local[v]);
      }
      std::sort(out.begin(), out.end());
      return true;
    };
    VertexSet w;
    if (!to_local(s.witness, w)) return at + "witness leaves the tracked part";
    const int m = sub.graph.size();
    VertexMask alive = VertexMask::of(g.size(), current);
    if (s.kind == TrimKind::Degree) {
      if (s.cops != 1 || s.stationed != VertexSet{s.vertex}) return at + "degree step must station one cop on v";
      if (s.vertex < 0 || s.vertex >= g.size() || local[s.vertex] < 0) return at + "vertex not in tracked part";
      Vertex lv = local[s.vertex];
      if (!heavy(sub.graph.degree(lv), cert.p)) return at + "degree below 1/p";
      VertexSet expect{lv};
      expect.insert(expect.end(), sub.graph.out(lv).begin(), sub.graph.out(lv).end());
      std::sort(expect.begin(), expect.end());
      if (expect != w) return at + "witness is not the closed out-neighbourhood";
      for (Vertex v : s.witness) alive.reset(v);
    } else {
      if (w.empty() || 2 * static_cast<int>(w.size()) >= m) return at + "witness size not below m/2";
      VertexSet b = sub.graph.directed() ? in_boundary(sub.graph, w) : boundary(sub.graph, w);
      VertexSet mapped;
      for (Vertex v : b) mapped.push_back(sub.to_parent[v]);
      if (mapped != s.stationed) return at + "stationed set is not the boundary";
      if (static_cast<int>(b.size()) != s.cops) return at + "cop count differs from boundary size";
      if (b.size() > cert.p * w.size() + kTol) return at + "boundary exceeds p|S|";
      for (Vertex v : s.stationed) alive.reset(v);
    }
    VertexSet next = largest_part(g, alive);
    VertexSet removed;
    VertexMask keep = VertexMask::of(g.size(), next);
    for (Vertex v : current)
      if (!keep.test(v)) removed.push_back(v);
    if (removed != s.removed) return at + "removed set does not replay";
    if (s.cops > cert.p * removed.size() + kTol) return at + "spends more than a p-fraction of what it removes";
    total += s.cops;
    current = std::move(next);
  }
  if (current != cert.residual) return "residual does not replay";
  if (!(induced(g, current).graph == cert.residual_graph)) return "residual graph mismatch";
  if (total != cert.total_cops) return "total cops mismatch";
  if (total > cert.p * (g.size() - static_cast<double>(current.size())) + kTol) return "total exceeds p(n - |residual|)";
  const Graph& r = cert.residual_graph;
  for (Vertex v = 0; v < r.size(); ++v)
    if (heavy(r.degree(v), cert.p)) return "residual vertex with degree >= 1/p";
  return {};
}

} // namespace pursuit
