#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace pursuit {

/// Seeded generator used everywhere randomness appears. The engine is
/// std::mt19937_64, whose output sequence is fixed by the standard; the
/// helpers below avoid std::*_distribution (implementation-defined) so a seed
/// gives the same stream on every platform.
class Rng {
public:
  static constexpr const char* kAlgorithm = "mt19937_64/v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform() < p; }
  // Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound);

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

  /// k distinct values from 0..n-1, in ascending order.
  std::vector<int> sample(int n, int k);

private:
  std::mt19937_64 engine_;
};

/// Independent child seed for a numbered stream (splitmix64 finaliser).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace pursuit
