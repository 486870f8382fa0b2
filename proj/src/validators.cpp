#include "pursuit/validators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "pursuit/errors.hpp"
#include "pursuit/rng.hpp"

namespace pursuit {

std::string to_string(ValidationMode m) { return m == ValidationMode::Exhaustive ? "EXHAUSTIVE" : "SAMPLED"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Violated: return "VIOLATED";
    case Verdict::HoldsUpToCap: return "HOLDS-UP-TO-CAP";
  }
  return "?";
}

ValidationMode parse_mode(const std::string& s) {
  if (s == "exhaustive" || s == "EXHAUSTIVE") return ValidationMode::Exhaustive;
  if (s == "sampled" || s == "SAMPLED") return ValidationMode::Sampled;
  throw InvalidArgument("unknown validation mode '" + s + "'");
}

namespace {

std::vector<VertexMask> rows_of(const Graph& g) {
  std::vector<VertexMask> rows;
  rows.reserve(g.size());
  for (Vertex v = 0; v < g.size(); ++v) rows.push_back(VertexMask::of(g.size(), g.out(v)));
  return rows;
}

std::int64_t induced_with(const std::vector<VertexMask>& rows, const VertexSet& s, const VertexMask& mask) {
  std::int64_t twice = 0;
  for (Vertex v : s) twice += rows[v].count_and(mask);
  return twice / 2;
}

struct Probe {
  bool violated = false;
  double ratio = 0;
};

using SetCheck = std::function<Probe(const VertexSet&)>;

double choose(int n, int k) {
  double c = 1;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

constexpr double kEnumerationLimit = 5e7;

ValidatorReport start(const std::string& property, const ValidationOptions& opt) {
  ValidatorReport r;
  r.property = property;
  r.mode = opt.mode;
  r.cap = opt.mode == ValidationMode::Exhaustive ? opt.cap : 0;
  r.trials = opt.mode == ValidationMode::Sampled ? opt.trials : 0;
  r.seed = opt.mode == ValidationMode::Sampled ? opt.seed : 0;
  return r;
}

// Feeds one probe result into the report; true once a violation is recorded.
bool record(ValidatorReport& r, const VertexSet& s, const Probe& p) {
  ++r.examined;
  r.worst_ratio = std::max(r.worst_ratio, p.ratio);
  if (!p.violated) return false;
  r.verdict = Verdict::Violated;
  r.witness = s;
  return true;
}

// All subsets with lo <= |S| <= hi. Returns true on a violation.
bool enumerate(int n, int lo, int hi, const SetCheck& check, ValidatorReport& r) {
  for (int k = std::max(lo, 1); k <= hi && k <= n; ++k) {
    if (choose(n, k) > kEnumerationLimit)
      throw InvalidArgument("exhaustive enumeration of " + std::to_string(k) + "-subsets of " + std::to_string(n) +
                            " vertices is too large; lower the cap or use sampled mode");
    VertexSet s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    while (true) {
      if (record(r, s, check(s))) return true;
      int i = k - 1;
      while (i >= 0 && s[i] == n - k + i) --i;
      if (i < 0) break;
      ++s[i];
      for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
  }
  return false;
}

std::vector<int> size_buckets(int lo, int hi) {
  std::vector<int> sizes;
  if (hi < lo) return sizes;
  if (hi - lo < 16) {
    for (int s = lo; s <= hi; ++s) sizes.push_back(s);
    return sizes;
  }
  for (int b = 0; b < 16; ++b) {
    double t = static_cast<double>(b) / 15;
    sizes.push_back(static_cast<int>(std::lround(lo * std::pow(static_cast<double>(hi) / lo, t))));
  }
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  return sizes;
}

bool sample_sets(int n, const std::vector<int>& sizes, const ValidationOptions& opt, const SetCheck& check,
            ValidatorReport& r) {
  if (sizes.empty()) return false;
  Rng rng(opt.seed);
  for (int t = 0; t < opt.trials; ++t) {
    int k = sizes[t % sizes.size()];
    VertexSet s = rng.sample(n, k);
    if (record(r, s, check(s))) return true;
  }
  return false;
}

// Grows a set greedily by most neighbours inside; on_size(set prefix length,
// induced edges) returns true to stop. Returns the insertion order.
std::vector<Vertex> greedy_dense(const Graph& g, Vertex start, int max_size,
                                 const std::function<bool(int, std::int64_t)>& on_size) {
  const int n = g.size();
  std::vector<int> inside(n, 0);
  std::vector<bool> taken(n, false);
  std::vector<Vertex> order;
  std::int64_t edges = 0;
  Vertex v = start;
  while (true) {
    taken[v] = true;
    order.push_back(v);
    edges += inside[v];
    for (Vertex w : g.out(v)) ++inside[w];
    if (on_size(static_cast<int>(order.size()), edges)) return order;
    if (static_cast<int>(order.size()) >= max_size) return order;
    Vertex best = -1;
    for (Vertex w = 0; w < n; ++w)
      if (!taken[w] && (best < 0 || inside[w] > inside[best])) best = w;
    if (best < 0) return order;
    v = best;
  }
}

VertexSet sorted_prefix(const std::vector<Vertex>& order, int k) {
  VertexSet s(order.begin(), order.begin() + k);
  std::sort(s.begin(), s.end());
  return s;
}

// Runs greedy growth from a few seeded starts over an induced-edge property.
bool greedy_edges(const Graph& g, int max_size, const ValidationOptions& opt, int runs,
                  const std::function<Probe(int, std::int64_t)>& probe, ValidatorReport& r) {
  if (g.size() == 0 || max_size < 1) return false;
  Rng rng(derive_seed(opt.seed, 77));
  for (int i = 0; i < runs; ++i) {
    Vertex start = static_cast<Vertex>(rng.below(g.size()));
    int hit = 0;
    auto order = greedy_dense(g, start, max_size, [&](int k, std::int64_t e) {
      Probe p = probe(k, e);
      r.worst_ratio = std::max(r.worst_ratio, p.ratio);
      if (p.violated) hit = k;
      return p.violated;
    });
    ++r.examined;
    if (hit > 0) {
      r.verdict = Verdict::Violated;
      r.witness = sorted_prefix(order, hit);
      return true;
    }
  }
  return false;
}

void finish(ValidatorReport& r, bool complete) {
  if (r.verdict == Verdict::Violated) return;
  r.verdict = complete ? Verdict::Holds : Verdict::HoldsUpToCap;
}

} // namespace

std::int64_t induced_edges(const Graph& g, const VertexSet& s) {
  VertexMask mask = VertexMask::of(g.size(), s);
  std::int64_t twice = 0;
  for (Vertex v : s)
    for (Vertex w : g.out(v))
      if (mask.test(w)) ++twice;
  return twice / 2;
}

std::int64_t covered_edges(const Graph& g, const VertexSet& s) {
  std::int64_t deg = 0;
  for (Vertex v : s) deg += g.degree(v);
  return deg - induced_edges(g, s);
}

std::int64_t cross_edges(const Graph& g, const VertexSet& a, const VertexSet& b) {
  VertexMask mb = VertexMask::of(g.size(), b);
  std::int64_t e = 0;
  for (Vertex v : a)
    for (Vertex w : g.out(v))
      if (mb.test(w)) ++e;
  return e;
}

int spread_count(const Graph& g, const VertexSet& u, double threshold) {
  VertexMask mu = VertexMask::of(g.size(), u);
  int count = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (mu.test(v)) continue;
    int d = 0;
    for (Vertex w : g.out(v))
      if (mu.test(w)) ++d;
    if (d >= threshold) ++count;
  }
  return count;
}

ValidatorReport validate_subset_avg_degree(const Graph& g, int s_max, double bound, const ValidationOptions& opt) {
  ValidatorReport r = start("subset-avg-degree", opt);
  r.params = {{"s_max", s_max}, {"bound", bound}};
  const int n = g.size();
  s_max = std::min(s_max, n);
  auto rows = rows_of(g);
  SetCheck check = [&](const VertexSet& s) {
    std::int64_t e = induced_with(rows, s, VertexMask::of(n, s));
    double avg = 2.0 * e / s.size();
    return Probe{avg > bound, bound > 0 ? avg / bound : (avg > 0 ? INFINITY : 0)};
  };
  if (opt.mode == ValidationMode::Exhaustive) {
    enumerate(n, 1, std::min(s_max, opt.cap), check, r);
    finish(r, opt.cap >= s_max);
    return r;
  }
  auto probe = [&](int k, std::int64_t e) {
    double avg = 2.0 * e / k;
    return Probe{avg > bound, bound > 0 ? avg / bound : 0};
  };
  if (!greedy_edges(g, s_max, opt, std::max(1, opt.trials / 1000), probe, r))
    sample_sets(n, size_buckets(1, s_max), opt, check, r);
  finish(r, true);
  return r;
}

ValidatorReport validate_cover(const Graph& g, int size, double bound_per_vertex, const ValidationOptions& opt) {
  ValidatorReport r = start("cover", opt);
  const double bound = bound_per_vertex * size;
  r.params = {{"size", size}, {"bound_per_vertex", bound_per_vertex}, {"bound", bound}};
  const int n = g.size();
  if (size < 0) throw InvalidArgument("cover set size must be >= 0");
  if (size == 0 || size > n) {
    r.verdict = Verdict::Holds;
    return r;
  }
  SetCheck check = [&](const VertexSet& s) {
    double c = static_cast<double>(covered_edges(g, s));
    return Probe{c > bound, bound > 0 ? c / bound : (c > 0 ? INFINITY : 0)};
  };
  // The top `size` degrees bound what any set of that size can cover.
  std::vector<Vertex> by_degree(n);
  for (int v = 0; v < n; ++v) by_degree[v] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  VertexSet top(by_degree.begin(), by_degree.begin() + size);
  std::sort(top.begin(), top.end());
  if (record(r, top, check(top))) return r;
  std::int64_t top_sum = 0;
  for (int i = 0; i < size; ++i) top_sum += g.degree(by_degree[i]);
  r.params["top_degree_sum"] = static_cast<double>(top_sum);
  if (top_sum <= bound) {
    r.verdict = Verdict::Holds;
    return r;
  }
  if (opt.mode == ValidationMode::Exhaustive) {
    if (size <= opt.cap) enumerate(n, size, size, check, r);
    finish(r, size <= opt.cap);
    return r;
  }
  sample_sets(n, {size}, opt, check, r);
  finish(r, true);
  return r;
}

ValidatorReport validate_pair_connect(const Graph& g, int s0, const ValidationOptions& opt) {
  ValidatorReport r = start("pair-connect", opt);
  r.params = {{"s0", s0}};
  const int n = g.size();
  if (s0 < 1) throw InvalidArgument("pair-connect needs s0 >= 1");
  if (2 * s0 > n) {
    r.verdict = Verdict::Holds;
    return r;
  }
  auto rows = rows_of(g);
  // A admits a partner B exactly when s0 vertices lie outside A and N(A).
  VertexSet partner;
  SetCheck check = [&](const VertexSet& a) {
    VertexMask closed = VertexMask::of(n, a);
    for (Vertex v : a) closed |= rows[v];
    int free = n - closed.count();
    Probe p{free >= s0, static_cast<double>(free) / s0};
    if (p.violated) {
      auto rest = closed.complement().members();
      partner.assign(rest.begin(), rest.begin() + s0);
    }
    return p;
  };
  if (opt.mode == ValidationMode::Exhaustive) {
    r.cap = s0;
    enumerate(n, s0, s0, check, r);
  } else {
    Rng rng(opt.seed);
    for (int t = 0; t < opt.trials; ++t) {
      VertexSet a;
      if (t % 2 == 0) {
        a = rng.sample(n, s0);
      } else {
        // breadth-first blob: a set with a small closed neighbourhood
        Vertex v = static_cast<Vertex>(rng.below(n));
        Vertex src[] = {v};
        auto d = distances(g, src, Direction::Out);
        std::vector<Vertex> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) {
          int dx = d[x] < 0 ? n : d[x], dy = d[y] < 0 ? n : d[y];
          return dx < dy;
        });
        a.assign(order.begin(), order.begin() + s0);
        std::sort(a.begin(), a.end());
      }
      if (record(r, a, check(a))) break;
    }
  }
  if (r.verdict == Verdict::Violated) {
    r.witness_other = partner;
    return r;
  }
  finish(r, true);
  return r;
}

ValidatorReport validate_span_few(const Graph& g, int s0, double factor, const ValidationOptions& opt) {
  ValidatorReport r = start("span-few", opt);
  const int n = g.size();
  const double ln = n > 1 ? std::log(static_cast<double>(n)) : 0.0;
  r.params = {{"s0", s0}, {"factor", factor}, {"log_n", ln}};
  s0 = std::min(s0, n);
  auto rows = rows_of(g);
  auto probe = [&](int k, std::int64_t e) {
    double bound = factor * k * ln;
    return Probe{e > bound, bound > 0 ? e / bound : (e > 0 ? INFINITY : 0)};
  };
  SetCheck check = [&](const VertexSet& s) {
    return probe(static_cast<int>(s.size()), induced_with(rows, s, VertexMask::of(n, s)));
  };
  if (opt.mode == ValidationMode::Exhaustive) {
    enumerate(n, 1, std::min(s0, opt.cap), check, r);
    finish(r, opt.cap >= s0);
    return r;
  }
  if (!greedy_edges(g, s0, opt, std::max(1, opt.trials / 1000), probe, r))
    sample_sets(n, size_buckets(1, s0), opt, check, r);
  finish(r, true);
  return r;
}

ValidatorReport validate_degree_spread(const Graph& g, double gamma, double np, const ValidationOptions& opt) {
  ValidatorReport r = start("degree-spread", opt);
  const int n = g.size();
  const double threshold = gamma * np;
  const int t_lo = static_cast<int>(std::ceil(threshold));
  const int t_hi = static_cast<int>(std::floor(gamma * gamma * gamma / (2 * std::exp(5.0)) * n));
  r.params = {{"gamma", gamma}, {"np", np}, {"threshold", threshold}, {"t_lo", t_lo}, {"t_hi", t_hi}};
  if (!(gamma > 0) || !(np > 0)) throw InvalidArgument("degree-spread needs gamma > 0 and np > 0");
  SetCheck check = [&](const VertexSet& u) {
    double bound = 3.0 * u.size() / threshold;
    int c = spread_count(g, u, threshold);
    return Probe{c > bound, bound > 0 ? c / bound : 0};
  };
  if (t_hi < std::max(t_lo, 1)) {
    r.verdict = Verdict::Holds;  // no admissible t
    return r;
  }
  if (opt.mode == ValidationMode::Exhaustive) {
    enumerate(n, t_lo, std::min(t_hi, opt.cap), check, r);
    finish(r, opt.cap >= t_hi);
    return r;
  }
  sample_sets(n, size_buckets(std::max(t_lo, 1), std::min(t_hi, n)), opt, check, r);
  finish(r, true);
  return r;
}

ValidatorReport validate_degree_range(const Graph& g, double lo, double hi) {
  ValidatorReport r;
  r.property = "degree-range";
  r.mode = ValidationMode::Exhaustive;
  r.cap = 1;
  r.params = {{"lo", lo}, {"hi", hi}};
  for (Vertex v = 0; v < g.size(); ++v) {
    double d = g.degree(v);
    double ratio = std::max(hi > 0 ? d / hi : 0.0, d > 0 ? lo / d : (lo > 0 ? INFINITY : 0.0));
    if (record(r, {v}, Probe{d < lo || d > hi, ratio})) return r;
  }
  r.verdict = Verdict::Holds;
  return r;
}

ValidatorReport validate_edge_count(const Graph& g, double min_edges) {
  ValidatorReport r;
  r.property = "edge-count";
  r.mode = ValidationMode::Exhaustive;
  r.params = {{"min_edges", min_edges}, {"edges", static_cast<double>(g.edge_count())}};
  r.examined = 1;
  double m = static_cast<double>(g.edge_count());
  r.worst_ratio = m > 0 ? min_edges / m : (min_edges > 0 ? INFINITY : 0);
  if (m < min_edges) {
    r.verdict = Verdict::Violated;
    for (Vertex v = 0; v < g.size(); ++v) r.witness.push_back(v);
  }
  return r;
}

bool recheck_witness(const Graph& g, const ValidatorReport& r) {
  if (r.verdict != Verdict::Violated) return false;
  auto param = [&](const char* k) { return r.params.at(k); };
  const auto& s = r.witness;
  const int n = g.size();
  if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  for (Vertex v : s)
    if (v < 0 || v >= n) return false;
  const double k = static_cast<double>(s.size());
  if (r.property == "subset-avg-degree")
    return !s.empty() && k <= param("s_max") && 2.0 * induced_edges(g, s) / k > param("bound");
  if (r.property == "cover")
    return k == param("size") && covered_edges(g, s) > param("bound_per_vertex") * k;
  if (r.property == "pair-connect") {
    const auto& b = r.witness_other;
    if (k != param("s0") || static_cast<double>(b.size()) != param("s0")) return false;
    VertexMask ma = VertexMask::of(n, s);
    for (Vertex v : b)
      if (ma.test(v)) return false;
    return cross_edges(g, s, b) == 0;
  }
  if (r.property == "span-few")
    return !s.empty() && k <= param("s0") && induced_edges(g, s) > param("factor") * k * std::log(static_cast<double>(n));
  if (r.property == "degree-spread")
    return k >= param("t_lo") && k <= param("t_hi") &&
           spread_count(g, s, param("threshold")) > 3.0 * k / param("threshold");
  if (r.property == "degree-range")
    return s.size() == 1 && (g.degree(s[0]) < param("lo") || g.degree(s[0]) > param("hi"));
  if (r.property == "edge-count") return static_cast<double>(g.edge_count()) < param("min_edges");
  return false;
}

} // namespace pursuit
