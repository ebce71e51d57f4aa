#include "turmlab/edit.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace turmlab {

long long edit_count_labelled(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count())
    throw std::invalid_argument("edit_count_labelled: vertex counts differ");
  long long twice = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    twice += (g.neighbours(v) ^ h.neighbours(v)).count();
  return twice / 2;
}

namespace {

// Images are assigned to h's vertices in index order; the running mismatch
// count over already-assigned pairs prunes against the best complete map.
struct IsoBnB {
  const Graph& g;
  const Graph& h;
  const VertexSet& preserve;
  int n;
  long long best;
  std::vector<int> img;
  std::vector<bool> used;

  void rec(int v, long long cost) {
    if (cost >= best) return;
    if (v == n) {
      best = cost;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || preserve.test(v) != preserve.test(w)) continue;
      long long c = cost;
      for (int u = 0; u < v && c < best; ++u)
        c += h.has_edge(v, u) != g.has_edge(w, img[u]);
      if (c >= best) continue;
      img[v] = w;
      used[w] = true;
      rec(v + 1, c);
      used[w] = false;
    }
  }
};

long long mapped_cost(const Graph& g, const Graph& h, const std::vector<int>& img) {
  long long cost = 0;
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    for (int u = v + 1; u < n; ++u)
      cost += h.has_edge(v, u) != g.has_edge(img[v], img[u]);
  return cost;
}

// Pairwise image swaps within each block until no swap improves the cost.
EditDistance swap_descent(const Graph& g, const Graph& h, const VertexSet& preserve) {
  const int n = g.vertex_count();
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  long long cost = mapped_cost(g, h, img);
  bool improved = true;
  while (improved && cost > 0) {
    improved = false;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (preserve.test(a) != preserve.test(b)) continue;
        std::swap(img[a], img[b]);
        long long c = mapped_cost(g, h, img);
        if (c < cost) {
          cost = c;
          improved = true;
        } else {
          std::swap(img[a], img[b]);
        }
      }
    }
  }
  return {cost, false};
}

}  // namespace

EditDistance edit_distance_iso(const Graph& g, const Graph& h,
                               const VertexSet& preserve) {
  if (g.vertex_count() != h.vertex_count())
    throw std::invalid_argument("edit_distance_iso: vertex counts differ");
  if (preserve.universe() != g.vertex_count())
    throw std::invalid_argument("edit_distance_iso: preserve universe mismatch");
  const int n = g.vertex_count();
  if (n > kExactEditDistanceLimit) return swap_descent(g, h, preserve);
  IsoBnB s{g, h, preserve, n, edit_count_labelled(g, h),
           std::vector<int>(n, -1), std::vector<bool>(n, false)};
  s.rec(0, 0);
  return {s.best, true};
}

}  // namespace turmlab
