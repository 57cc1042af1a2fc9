#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace bootperc {

using Vertex = std::uint32_t;

// Packed vertex set, one bit per vertex. Word layout is fixed (little-endian
// bit order within 64-bit words) so that equality and subset tests are plain
// word loops.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::uint64_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::uint64_t size() const { return n_; }

  bool test(Vertex v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }
  void set(Vertex v) { w_[v >> 6] |= std::uint64_t(1) << (v & 63); }
  void reset(Vertex v) { w_[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        f(Vertex(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  std::uint64_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace bootperc
