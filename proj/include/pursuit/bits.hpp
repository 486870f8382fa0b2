#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pursuit {

using Vertex = int;

/// Sorted list of vertex identifiers. Every operation in the library reports
/// vertex sets in ascending order.
using VertexSet = std::vector<Vertex>;

/// Dense membership mask over 0..n-1.
class VertexMask {
public:
  VertexMask() = default;
  explicit VertexMask(int n) : n_(n), words_((n + 63) / 64, 0) {}
  static VertexMask of(int n, std::span<const Vertex> members);
  static VertexMask full(int n);

  int universe() const { return n_; }
  bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void set(Vertex v) { words_[v >> 6] |= (std::uint64_t{1} << (v & 63)); }
  void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void clear();

  int count() const;
  bool any() const;
  bool intersects(const VertexMask& o) const;
  // popcount(*this & o) without materializing the intersection.
  int count_and(const VertexMask& o) const;

  VertexMask& operator|=(const VertexMask& o);
  VertexMask& operator&=(const VertexMask& o);
  VertexMask& subtract(const VertexMask& o);
  VertexMask complement() const;

  VertexSet members() const;
  bool operator==(const VertexMask& o) const = default;

  std::span<const std::uint64_t> words() const { return words_; }

private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace pursuit
