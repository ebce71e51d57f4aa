#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace turmlab {

// Subset of a fixed vertex universe {0,...,n-1}, stored as 64-bit words.
// Unused high bits of the last word stay zero; all binary operations
// require both operands to share the same universe.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), w_(word_count(universe), 0) {
    assert(universe >= 0);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.w_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static VertexSet single(int universe, int v) {
    VertexSet s(universe);
    s.set(v);
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.set(v);
    return s;
  }

  // Half-open range [lo, hi) clamped to the universe.
  static VertexSet range(int universe, int lo, int hi) {
    VertexSet s(universe);
    for (int v = std::max(lo, 0); v < std::min(hi, universe); ++v) s.set(v);
    return s;
  }

  int universe() const { return n_; }

  bool test(int v) const {
    assert(v >= 0 && v < n_);
    return (w_[v >> 6] >> (v & 63)) & 1;
  }

  void set(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void reset(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : w_) if (w) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  VertexSet& operator^=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  // Set difference: elements of *this not in o.
  VertexSet minus(const VertexSet& o) const {
    assert(n_ == o.n_);
    VertexSet r(*this);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
    return r;
  }

  VertexSet complement() const {
    VertexSet r(*this);
    for (auto& w : r.w_) w = ~w;
    r.trim();
    return r;
  }

  // Elements strictly greater than v.
  VertexSet above(int v) const {
    VertexSet r(*this);
    if (v < 0) return r;
    if (v >= n_ - 1) { r.clear(); return r; }
    int wi = v >> 6;
    for (int i = 0; i < wi; ++i) r.w_[i] = 0;
    r.w_[wi] &= ~((std::uint64_t{2} << (v & 63)) - 1);
    return r;
  }

  // Smallest element, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return (int)(i * 64) + std::countr_zero(w_[i]);
    return -1;
  }

  // Smallest element strictly greater than v, or -1.
  int next(int v) const {
    if (v < 0) return first();
    std::size_t wi = (std::size_t)(v >> 6);
    if (wi >= w_.size()) return -1;
    std::uint64_t w = w_[wi] & ~((std::uint64_t{2} << (v & 63)) - 1);
    if (w) return (int)(wi * 64) + std::countr_zero(w);
    for (std::size_t i = wi + 1; i < w_.size(); ++i)
      if (w_[i]) return (int)(i * 64) + std::countr_zero(w_[i]);
    return -1;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve((std::size_t)count());
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  bool operator==(const VertexSet&) const = default;

private:
  static std::size_t word_count(int n) { return (std::size_t)((n + 63) / 64); }

  void trim() {
    if (n_ % 64 != 0 && !w_.empty())
      w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Order on sets viewed as ascending vertex lists: the set owning the
// smallest element of the symmetric difference comes first.
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
  VertexSet d = a ^ b;
  int v = d.first();
  if (v < 0) return false;
  return a.test(v);
}

}  // namespace turmlab
