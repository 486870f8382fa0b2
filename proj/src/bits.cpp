#include "pursuit/bits.hpp"

#include <bit>

namespace pursuit {

VertexMask VertexMask::of(int n, std::span<const Vertex> members) {
  VertexMask m(n);
  for (Vertex v : members) m.set(v);
  return m;
}

VertexMask VertexMask::full(int n) {
  VertexMask m(n);
  for (Vertex v = 0; v < n; ++v) m.set(v);
  return m;
}

void VertexMask::clear() {
  for (auto& w : words_) w = 0;
}

int VertexMask::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexMask::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

bool VertexMask::intersects(const VertexMask& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

int VertexMask::count_and(const VertexMask& o) const {
  int c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
  return c;
}

VertexMask& VertexMask::operator|=(const VertexMask& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexMask& VertexMask::operator&=(const VertexMask& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexMask& VertexMask::subtract(const VertexMask& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

VertexMask VertexMask::complement() const {
  VertexMask m = full(n_);
  m.subtract(*this);
  return m;
}

VertexSet VertexMask::members() const {
  VertexSet out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(static_cast<Vertex>(i * 64 + b));
      w &= w - 1;
    }
  }
  return out;
}

} // namespace pursuit
