#include "turmlab/clique.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace turmlab {

namespace {

// Tomita-style expansion: candidates are greedily coloured, then processed in
// reverse colour order so depth + colour bounds the reachable clique size.
struct CliqueSearch {
  const Graph& g;
  int best = 0;
  int target = 0;  // when > 0, stop as soon as best reaches it
  bool done = false;

  void expand(const VertexSet& cand, int depth) {
    if (done) return;
    if (cand.empty()) {
      if (depth > best) best = depth;
      if (target > 0 && best >= target) done = true;
      return;
    }
    std::vector<int> order;
    std::vector<int> bound;
    VertexSet uncoloured = cand;
    int colour = 0;
    while (!uncoloured.empty()) {
      ++colour;
      VertexSet cls = uncoloured;
      while (!cls.empty()) {
        int v = cls.first();
        order.push_back(v);
        bound.push_back(colour);
        uncoloured.reset(v);
        cls.reset(v);
        cls = cls.minus(g.neighbours(v));
      }
    }
    VertexSet pool = cand;
    for (int i = (int)order.size() - 1; i >= 0; --i) {
      if (depth + bound[i] <= best) return;
      int v = order[i];
      expand(pool & g.neighbours(v), depth + 1);
      if (done) return;
      pool.reset(v);
    }
  }
};

}  // namespace

int max_clique_size(const Graph& g, const VertexSet& restrict_to) {
  CliqueSearch s{g};
  s.expand(restrict_to, 0);
  return s.best;
}

bool has_clique(const Graph& g, const VertexSet& restrict_to, int k) {
  if (k <= 0) return true;
  if (restrict_to.count() < k) return false;
  CliqueSearch s{g};
  s.target = k;
  s.expand(restrict_to, 0);
  return s.best >= k;
}

VertexSet max_clique(const Graph& g, const VertexSet& restrict_to) {
  const int n = g.vertex_count();
  VertexSet clique(n);
  int need = max_clique_size(g, restrict_to);
  VertexSet cand = restrict_to;
  while (need > 0) {
    bool found = false;
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      VertexSet rest = (cand & g.neighbours(v)).above(v);
      if (has_clique(g, rest, need - 1)) {
        clique.set(v);
        cand = rest;
        --need;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("max_clique: completion failed");
  }
  return clique;
}

namespace {

// Ascending DFS over cliques; the first complete witness is lex-least.
// Branches that can no longer reach M (neither the chosen vertices nor the
// remaining candidates meet it) are cut.
struct TouchSearch {
  const Graph& g;
  const VertexSet& M;
  std::optional<VertexSet> found;

  bool rec(VertexSet& chosen, const VertexSet& cand, int left, bool touched) {
    if (left == 0) {
      if (!touched) return false;
      found = chosen;
      return true;
    }
    if (cand.count() < left) return false;
    if (!touched && !cand.intersects(M)) return false;
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      VertexSet nxt = (cand & g.neighbours(v)).above(v);
      chosen.set(v);
      if (rec(chosen, nxt, left - 1, touched || M.test(v))) return true;
      chosen.reset(v);
    }
    return false;
  }
};

}  // namespace

std::optional<VertexSet> find_kr_touching(const Instance& inst) {
  const int n = inst.n();
  if (inst.r > n || inst.M.empty()) return std::nullopt;
  TouchSearch s{inst.graph, inst.M};
  VertexSet chosen(n);
  VertexSet all = VertexSet::full(n);
  s.rec(chosen, all, inst.r, false);
  return s.found;
}

bool small_graph_clique_touching(const std::uint64_t* adj, std::uint64_t m_mask,
                                 std::uint64_t cand, int k, bool touched) {
  if (k == 0) return touched;
  if (!touched && !(cand & m_mask)) return false;
  while (cand) {
    if (std::popcount(cand) < k) return false;
    int v = std::countr_zero(cand);
    cand &= cand - 1;  // rest of candidates are all > v
    if (small_graph_clique_touching(adj, m_mask, adj[v] & cand, k - 1,
                                    touched || ((m_mask >> v) & 1)))
      return true;
  }
  return false;
}

bool small_graph_has_kr_touching(const std::uint64_t* adj, int n,
                                 std::uint64_t m_mask, int r) {
  if (r > n || m_mask == 0) return false;
  std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return small_graph_clique_touching(adj, m_mask, all, r, false);
}

}  // namespace turmlab
