#pragma once

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace locgame {

// Fixed-width set of vertex ids backed by 64-bit words. The width is pinned
// at construction and must match the owning graph's vertex count.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int width) : n_(width), w_((width + 63) / 64, 0) {}

  static VertexSet full(int width) {
    VertexSet s(width);
    for (int i = 0; i < width; ++i) s.set(i);
    return s;
  }

  static VertexSet of(int width, std::initializer_list<int> vs) {
    VertexSet s(width);
    for (int v : vs) s.set(v);
    return s;
  }

  static VertexSet of(int width, const std::vector<int>& vs) {
    VertexSet s(width);
    for (int v : vs) s.set(v);
    return s;
  }

  int width() const { return n_; }

  bool test(int v) const {
    assert(v >= 0 && v < n_);
    return (w_[v >> 6] >> (v & 63)) & 1u;
  }

  void set(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] |= uint64_t{1} << (v & 63);
  }

  void reset(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] &= ~(uint64_t{1} << (v & 63));
  }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }

  bool empty() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }

  // First set bit, or -1 when empty.
  int first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
    return -1;
  }

  // First set bit strictly after v, or -1.
  int next(int v) const {
    ++v;
    if (v >= n_) return -1;
    size_t i = size_t(v) >> 6;
    uint64_t w = w_[i] & (~uint64_t{0} << (v & 63));
    while (true) {
      if (w) return int(i * 64 + __builtin_ctzll(w));
      if (++i == w_.size()) return -1;
      w = w_[i];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      while (w) {
        f(int(i * 64 + __builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

  bool is_subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  size_t hash() const {
    uint64_t h = uint64_t(n_) * 0x9e3779b97f4a7c15ull;
    for (uint64_t w : w_) {
      h ^= w;
      h *= 0xff51afd7ed558ccdull;
      h ^= h >> 33;
    }
    return size_t(h);
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct VertexSetHash {
  size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace locgame
