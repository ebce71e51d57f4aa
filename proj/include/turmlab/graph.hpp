#pragma once

#include <cassert>
#include <utility>
#include <vector>

#include "turmlab/bitset.hpp"

namespace turmlab {

// Simple undirected graph on {0,...,n-1} with bit-row adjacency.
// Rows are kept symmetric and irreflexive by construction.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) { assert(n >= 0); }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int vertex_count() const { return n_; }

  bool has_edge(int u, int v) const {
    assert(u >= 0 && u < n_ && v >= 0 && v < n_);
    if (u == v) return false;
    return adj_[u].test(v);
  }

  void add_edge(int u, int v) {
    assert(u != v);
    adj_[u].set(v);
    adj_[v].set(u);
  }

  void remove_edge(int u, int v) {
    assert(u != v);
    adj_[u].reset(v);
    adj_[v].reset(u);
  }

  // Replaces v's neighbourhood wholesale, keeping the adjacency symmetric.
  void set_neighbourhood(int v, const VertexSet& nb) {
    assert(v >= 0 && v < n_);
    assert(nb.universe() == n_ && !nb.test(v));
    VertexSet removed = adj_[v].minus(nb);
    VertexSet added = nb.minus(adj_[v]);
    for (int w = removed.first(); w >= 0; w = removed.next(w)) adj_[w].reset(v);
    for (int w = added.first(); w >= 0; w = added.next(w)) adj_[w].set(v);
    adj_[v] = nb;
  }

  const VertexSet& neighbours(int v) const {
    assert(v >= 0 && v < n_);
    return adj_[v];
  }

  int degree(int v) const { return adj_[v].count(); }

  long long edge_count() const {
    long long twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  bool operator==(const Graph&) const = default;

private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

}  // namespace turmlab
