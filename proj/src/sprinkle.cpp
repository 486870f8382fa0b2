#include "pursuit/sprinkle.hpp"

#include <algorithm>
#include <cmath>

#include "pursuit/rng.hpp"

namespace pursuit {

double default_threshold(double p, int n) { return 16.0 / p * std::log(static_cast<double>(n)); }

namespace {

struct Checker {
  const Graph& g;
  const SprinkleOptions& opt;
  double k;
  int cap;
  VertexMask cops;
  std::vector<VertexMask> balls;
  std::vector<VertexMask> stack;  // union of balls per depth
  VertexSet chosen;
  long long examined = 0;

  bool qualifies(const VertexMask& ball, int size) const {
    return opt.unconditional || ball.count() >= k * size - 1e-9;
  }

  // true if a violation was found (left in `chosen`)
  bool search(Vertex from, int depth) {
    for (Vertex v = from; v < g.size(); ++v) {
      chosen.push_back(v);
      stack[depth + 1] = stack[depth];
      stack[depth + 1] |= balls[v];
      ++examined;
      int size = depth + 1;
      const VertexMask& b = stack[depth + 1];
      if (qualifies(b, size) && b.count_and(cops) < size) return true;
      if (size < cap && search(v + 1, depth + 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

} // namespace

std::optional<VertexSet> sprinkle_violation(const Graph& g, const VertexSet& cops, const SprinkleOptions& opt,
                                            long long* examined) {
  if (opt.radius < 0) throw InvalidArgument("sprinkle radius must be nonnegative");
  const int n = g.size();
  Checker c{g, opt, opt.k.value_or(default_threshold(opt.p, n)), std::min(opt.verify_cap, n),
            VertexMask::of(n, cops), {}, {}, {}, 0};
  for (Vertex v = 0; v < n; ++v) {
    Vertex src[] = {v};
    c.balls.push_back(VertexMask::of(n, ball(g, src, opt.radius, opt.direction)));
  }
  c.stack.assign(c.cap + 1, VertexMask(n));
  bool bad = c.cap > 0 && c.search(0, 0);
  if (examined) *examined = c.examined;
  if (bad) return c.chosen;
  return std::nullopt;
}

SprinkleResult sprinkle(const Graph& g, const SprinkleOptions& opt) {
  if (!(opt.p > 0 && opt.p < 1)) throw InvalidArgument("sprinkle needs 0 < p < 1");
  if (opt.verify_cap < 0) throw InvalidArgument("verify cap must be nonnegative");
  const int n = g.size();
  SprinkleResult res;
  res.k = opt.k.value_or(default_threshold(opt.p, n));
  res.verified_cap = std::min(opt.verify_cap, n);
  res.complete = res.verified_cap >= n;
  const double limit = 2 * opt.p * n;
  if (limit >= n) {
    for (Vertex v = 0; v < n; ++v) res.cops.push_back(v);
    res.attempts = 0;
    res.verified_cap = n;
    res.complete = true;
    return res;
  }
  Rng rng(opt.seed);
  VertexSet best, best_violation;
  std::size_t best_size = 0;
  bool have_best = false;
  for (int attempt = 1; attempt <= opt.max_attempts; ++attempt) {
    VertexSet cops;
    for (Vertex v = 0; v < n; ++v)
      if (rng.bernoulli(opt.p)) cops.push_back(v);
    if (cops.size() > limit) continue;
    long long examined = 0;
    auto bad = sprinkle_violation(g, cops, opt, &examined);
    res.subsets_checked += examined;
    if (!bad) {
      res.cops = std::move(cops);
      res.attempts = attempt;
      return res;
    }
    // Keep the attempt whose first violation appears latest.
    if (!have_best || bad->size() > best_size || (bad->size() == best_size && *bad > best_violation)) {
      have_best = true;
      best_size = bad->size();
      best = cops;
      best_violation = *bad;
    }
  }
  throw SprinkleFailure("no placement passed verification in " + std::to_string(opt.max_attempts) + " attempts",
                        best, best_violation);
}

} // namespace pursuit
