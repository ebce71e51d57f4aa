#pragma once

#include "turmlab/graph.hpp"

namespace turmlab {

// |E(G) xor E(H)| for two graphs on the same labelled vertex set.
// Throws std::invalid_argument on a vertex-count mismatch.
long long edit_count_labelled(const Graph& g, const Graph& h);

struct EditDistance {
  long long edits = 0;
  bool exact = true;  // false when only the hill-climbing upper bound ran
};

inline constexpr int kExactEditDistanceLimit = 10;

// Minimum of edit_count_labelled(g, pi(h)) over vertex permutations pi that
// map `preserve` onto itself setwise. Exact (branch and bound over
// assignments) up to kExactEditDistanceLimit vertices; beyond that a local
// search returns a flagged upper bound.
EditDistance edit_distance_iso(const Graph& g, const Graph& h,
                               const VertexSet& preserve);

}  // namespace turmlab
