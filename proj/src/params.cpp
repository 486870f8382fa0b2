#include "pursuit/params.hpp"

#include <cmath>
#include <limits>

#include "pursuit/errors.hpp"

namespace pursuit {

namespace {

const double kLog2 = std::log(2.0);
const double kLog16 = std::log(16.0);
constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

double log_k_of(double L, double log_p) { return kLog16 - log_p + std::log(L); }

// Bounds on log r_i, i = 0..count-1. Exact while d_i fits in 64 bits, then
// d_{i+1} lies in [d_i (1 + 1/R), d_i (1 + 1/R) + 1] and r_i in [d_i/R, d_i/R + 1].
struct LogSeq {
  std::vector<double> lo, hi;
};

LogSeq log_r(int R, int count) {
  LogSeq s;
  std::uint64_t d = static_cast<std::uint64_t>(R);
  bool exact = true;
  double dlo = 0, dhi = 0;  // log d_i bounds once inexact
  const double step = std::log1p(1.0 / R);
  const double log_R = std::log(static_cast<double>(R));
  for (int i = 0; i < count; ++i) {
    if (exact) {
      std::uint64_t r = (d + R - 1) / R;
      s.lo.push_back(std::log(static_cast<double>(r)));
      s.hi.push_back(s.lo.back());
      if (d > kMax / 4) {
        exact = false;
        dlo = dhi = std::log(static_cast<double>(d));
      } else {
        d += r;
      }
      continue;
    }
    dhi += std::log(1.0 + 1.0 / R + std::exp(-dhi));
    dlo += step;
    s.lo.push_back(dlo - log_R);
    s.hi.push_back(dhi - log_R + std::log1p(std::exp(log_R - dhi)));
  }
  return s;
}

int minimal_l_general(double L, double log_p) {
  double target = std::log(log_k_of(L, log_p));
  double ll = log_log1p(log_p);
  int l = std::max(1, static_cast<int>(std::ceil((target - ll) / kLog2)) - 2);
  while (l > 1 && (l - 1) * kLog2 + ll >= target) --l;
  while (l * kLog2 + ll < target) ++l;
  return l;
}

} // namespace

const char* to_string(Regime r) {
  switch (r) {
  case Regime::General: return "general";
  case Regime::Digraph: return "digraph";
  case Regime::Fast: return "fast";
  }
  return "?";
}

Regime parse_regime(const std::string& s) {
  if (s == "general") return Regime::General;
  if (s == "digraph") return Regime::Digraph;
  if (s == "fast") return Regime::Fast;
  throw InvalidArgument("regime must be general, digraph or fast");
}

double log_log1p(double log_p) {
  if (log_p < -30) return log_p + std::log1p(-0.5 * std::exp(log_p));
  return std::log(std::log1p(std::exp(log_p)));
}

std::vector<std::uint64_t> d_sequence(int R, int count) {
  if (R < 1) throw InvalidArgument("speed must be at least 1");
  std::vector<std::uint64_t> out;
  std::uint64_t d = static_cast<std::uint64_t>(R);
  for (int i = 0; i < count; ++i) {
    out.push_back(d);
    std::uint64_t inc = (d + R - 1) / R;
    if (d > kMax - inc) break;
    d += inc;
  }
  return out;
}

std::vector<std::uint64_t> fast_radii(int R, int count) {
  auto d = d_sequence(R, count);
  for (auto& x : d) x = (x + R - 1) / R;
  return d;
}

Margins evaluate_general(double L, double log_p, int l) {
  double log_k = log_k_of(L, log_p);
  double grow = std::exp(l * kLog2 + log_log1p(log_p));  // 2^l log(1+p)
  Margins m;
  m.margin1 = (L + log_p - kLog2) - ((l + 1) * log_k + grow);
  m.margin2 = grow - log_k;
  return m;
}

Margins evaluate_digraph(double L, double log_p, double r) {
  double log_k = log_k_of(L, log_p);
  double grow = r * std::exp(log_log1p(log_p));  // r log(1+p)
  Margins m;
  m.margin1 = (L + log_p - kLog2) - (kLog2 - r * log_p + grow);
  m.margin2 = grow - log_k;
  return m;
}

Margins evaluate_fast(double L, int R, double log_p, int l) {
  if (R < 1) throw InvalidArgument("speed must be at least 1");
  double log_k = log_k_of(L, log_p);
  LogSeq s = log_r(R, l + 1);
  double ll = log_log1p(log_p);
  double grow_hi = std::exp(s.hi[l] + ll);
  double grow_lo = std::exp(s.lo[l] + ll);
  Margins m;
  m.margin1 = (L + log_p - kLog2) - ((std::ldexp(1.0, R) + l) * log_k + grow_hi);
  m.margin2 = grow_lo - log_k;
  return m;
}

ExpansionParams solve_params_general(double L) {
  if (!(L > 0) || !std::isfinite(L)) throw InvalidArgument("log n must be positive");
  ExpansionParams out;
  out.regime = Regime::General;
  out.log_n = L;
  out.alpha = 2;
  for (int step = 1; step <= 50; ++step) {
    double eps = step / 100.0;
    double log_p = -(1 - eps) * std::sqrt(L / kLog2) * kLog2;
    int l = minimal_l_general(L, log_p);
    Margins m = evaluate_general(L, log_p, l);
    out.grid.push_back({eps, m.margin1, m.margin2});
    if (m.margin1 >= 0 && m.margin2 >= 0 && !out.feasible) {
      out.feasible = true;
      out.epsilon = eps;
      out.log_p = log_p;
      out.l = l;
      out.margin1 = m.margin1;
      out.margin2 = m.margin2;
    }
  }
  if (!out.feasible) return out;
  out.p = std::exp(out.log_p);
  out.log_k = log_k_of(L, out.log_p);
  for (int i = 0; i <= out.l && i < 64; ++i) out.radii.push_back(std::uint64_t{1} << i);
  out.log_r_lo = out.log_r_hi = out.l * kLog2;
  return out;
}

ExpansionParams solve_params_digraph(double L) {
  if (!(L > 0) || !std::isfinite(L)) throw InvalidArgument("log n must be positive");
  ExpansionParams out;
  out.regime = Regime::Digraph;
  out.log_n = L;
  double loglog = std::log(L);
  double p = 13 * loglog * loglog / L;
  out.p = p;
  out.log_p = p > 0 ? std::log(p) : -std::numeric_limits<double>::infinity();
  if (!(p > 0 && p < 1)) {
    out.feasible = false;
    return out;
  }
  out.log_k = log_k_of(L, out.log_p);
  out.r = 6 / p * std::log(4 / p);
  out.log_r_lo = out.log_r_hi = std::log(out.r);
  Margins m = evaluate_digraph(L, out.log_p, out.r);
  out.margin1 = m.margin1;
  out.margin2 = m.margin2;
  out.grid.push_back({0, m.margin1, m.margin2});
  out.feasible = m.margin1 >= 0 && m.margin2 >= 0;
  out.l = 0;
  if (out.r < 1e18) out.radii.push_back(static_cast<std::uint64_t>(std::ceil(out.r)));
  return out;
}

ExpansionParams solve_params_fast(double L, int R) {
  if (!(L > 0) || !std::isfinite(L)) throw InvalidArgument("log n must be positive");
  if (R < 1) throw InvalidArgument("speed must be at least 1");
  ExpansionParams out;
  out.regime = Regime::Fast;
  out.log_n = L;
  out.R = R;
  out.alpha = 1.0 + 1.0 / R;
  const double log_alpha = std::log1p(1.0 / R);
  for (int step = 1; step <= 50; ++step) {
    double eps = step / 100.0;
    double log_p = -(1 - eps) * std::sqrt(L / log_alpha) * log_alpha;
    double target = std::log(log_k_of(L, log_p)) - log_log1p(log_p);  // need log r_l >= target
    // r_l grows at least like alpha^l, so this many terms always suffice.
    int count = static_cast<int>(std::ceil(std::max(0.0, target) / log_alpha)) + 2;
    LogSeq s = log_r(R, count);
    int l = -1;
    for (int i = 1; i < count; ++i)
      if (s.lo[i] >= target) {
        l = i;
        break;
      }
    if (l < 0) {
      out.grid.push_back({eps, -std::numeric_limits<double>::infinity(), -1});
      continue;
    }
    Margins m = evaluate_fast(L, R, log_p, l);
    out.grid.push_back({eps, m.margin1, m.margin2});
    if (m.margin1 >= 0 && m.margin2 >= 0 && !out.feasible) {
      out.feasible = true;
      out.epsilon = eps;
      out.log_p = log_p;
      out.l = l;
      out.margin1 = m.margin1;
      out.margin2 = m.margin2;
      out.log_r_lo = s.lo[l];
      out.log_r_hi = s.hi[l];
    }
  }
  if (!out.feasible) return out;
  out.p = std::exp(out.log_p);
  out.log_k = log_k_of(L, out.log_p);
  out.d_sequence = d_sequence(R, out.l + 1);
  out.radii = fast_radii(R, out.l + 1);
  return out;
}

} // namespace pursuit
