#pragma once

#include <cstdint>
#include <optional>

#include "pursuit/errors.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

struct SprinkleOptions {
  double p = 0.5;
  int radius = 1;
  // Sets S whose ball has at least k|S| vertices must see |S| cops. Unset:
  // k = (16/p) log n. Ignored when `unconditional`.
  std::optional<double> k;
  bool unconditional = false;
  // Out: cops in the ordinary ball B_r(S). In: cops that reach S within r arcs.
  Direction direction = Direction::Out;
  int verify_cap = 3;
  std::uint64_t seed = 0;
  int max_attempts = 200;
};

struct SprinkleResult {
  VertexSet cops;
  int verified_cap = 0;    // every S with |S| <= verified_cap was checked
  bool complete = false;   // verified_cap covers all subsets
  int attempts = 0;
  long long subsets_checked = 0;
  double k = 0;
};

/// The first S (lexicographic, |S| <= cap) breaking the guarded-ball
/// property for `cops`, or nullopt.
std::optional<VertexSet> sprinkle_violation(const Graph& g, const VertexSet& cops, const SprinkleOptions& opt,
                                            long long* examined = nullptr);

class SprinkleFailure : public PursuitError {
public:
  SprinkleFailure(const std::string& what, VertexSet best, VertexSet violation)
      : PursuitError(what), best_(std::move(best)), violation_(std::move(violation)) {}
  const VertexSet& best_attempt() const { return best_; }
  const VertexSet& violating_set() const { return violation_; }

private:
  VertexSet best_, violation_;
};

/// Includes each vertex independently with probability p, resampling until
/// the set has at most 2pn vertices and passes sprinkle_violation up to
/// verify_cap. When 2pn >= n every vertex is taken.
SprinkleResult sprinkle(const Graph& g, const SprinkleOptions& opt);

double default_threshold(double p, int n);

} // namespace pursuit
