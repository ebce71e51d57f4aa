#pragma once

#include <cstdint>

#include "turmlab/graph.hpp"

namespace turmlab {

inline constexpr int kCanonicalLimit = 10;

// Lexicographically least upper-triangle adjacency encoding over all vertex
// relabellings that map {0,...,m-1} onto itself setwise (m = 0 or m = n give
// the unrestricted canonical form). Bit order matches graph6: pairs (i, j),
// j = 1..n-1 outer, i < j, first pair in the most significant position.
// Requires n <= kCanonicalLimit (the key must fit one word).
std::uint64_t canonical_key(const Graph& g, int m);

// Rebuilds the graph encoded by a canonical key.
Graph key_to_graph(int n, std::uint64_t key);

}  // namespace turmlab
