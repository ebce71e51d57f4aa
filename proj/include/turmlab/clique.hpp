#pragma once

#include <cstdint>
#include <optional>

#include "turmlab/instance.hpp"

namespace turmlab {

// Size of a maximum clique of G restricted to `restrict`.
// Branch and bound with a greedy-colouring upper bound.
int max_clique_size(const Graph& g, const VertexSet& restrict_to);

// Whether G[restrict] contains a clique of k vertices (k <= 0 is trivially true).
bool has_clique(const Graph& g, const VertexSet& restrict_to, int k);

// A maximum clique of G[restrict]; among maximum cliques returns the
// lexicographically smallest vertex set. Empty restrict yields the empty set.
VertexSet max_clique(const Graph& g, const VertexSet& restrict_to);

// Lexicographically least r-clique of inst.graph intersecting inst.M,
// or nullopt when the constraint holds.
std::optional<VertexSet> find_kr_touching(const Instance& inst);

// 64-vertex fast path shared by the exhaustive sweeps: adjacency as one
// word per vertex. True iff some r-clique meets m_mask.
bool small_graph_has_kr_touching(const std::uint64_t* adj, int n,
                                 std::uint64_t m_mask, int r);

// True iff cand spans a k-clique and the clique meets m_mask (or `touched`
// already holds). Building block for incremental violation checks.
bool small_graph_clique_touching(const std::uint64_t* adj, std::uint64_t m_mask,
                                 std::uint64_t cand, int k, bool touched);

}  // namespace turmlab
