#include "turmlab/canonical.hpp"

#include <array>
#include <stdexcept>

namespace turmlab {

namespace {

// Branch and bound over block-respecting assignments. Positions are filled
// in order; placing position p appends the p adjacency bits against the
// already-placed prefix, so partial keys compare against the best prefix.
struct CanonBnB {
  const Graph& g;
  int n, m, total_bits;
  std::uint64_t best = ~std::uint64_t{0};
  bool have = false;
  std::array<int, kCanonicalLimit> img{};
  std::array<bool, kCanonicalLimit> used{};

  void rec(int pos, std::uint64_t partial, int bits, bool strictly_less) {
    if (pos == n) {
      if (!have || partial < best) {
        best = partial;
        have = true;
      }
      return;
    }
    const int lo = pos < m ? 0 : m;
    const int hi = pos < m ? m : n;
    for (int w = lo; w < hi; ++w) {
      if (used[w]) continue;
      std::uint64_t p2 = partial;
      for (int i = 0; i < pos; ++i)
        p2 = (p2 << 1) | (std::uint64_t)g.has_edge(img[i], w);
      const int b2 = bits + pos;
      bool less = strictly_less;
      if (have && !less) {
        std::uint64_t prefix = best >> (total_bits - b2);
        if (p2 > prefix) continue;
        if (p2 < prefix) less = true;
      }
      img[pos] = w;
      used[w] = true;
      rec(pos + 1, p2, b2, less);
      used[w] = false;
    }
  }
};

}  // namespace

std::uint64_t canonical_key(const Graph& g, int m) {
  const int n = g.vertex_count();
  if (n > kCanonicalLimit)
    throw std::out_of_range("canonical_key: too many vertices");
  if (m < 0 || m > n) throw std::invalid_argument("canonical_key: bad m");
  if (n <= 1) return 0;
  CanonBnB s{g, n, m, n * (n - 1) / 2};
  s.rec(0, 0, 0, false);
  return s.best;
}

Graph key_to_graph(int n, std::uint64_t key) {
  Graph g(n);
  const int total = n * (n - 1) / 2;
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((key >> (total - 1 - k)) & 1) g.add_edge(i, j);
  return g;
}

}  // namespace turmlab
