#pragma once

#include <vector>

#include "turmlab/family.hpp"
#include "turmlab/instance.hpp"
#include "turmlab/rational.hpp"

namespace turmlab {

struct PushStep {
  int vertex;
  VertexSet old_neighbourhood;
  VertexSet new_neighbourhood;
};

// Outcome of the degree-raising sweep: the rewritten instance, the steps in
// order, the total number of edge edits and the net edge gain (edits >= gain
// >= 0, gain = 0 exactly when nothing changed).
struct PushTrace {
  Instance result;
  std::vector<PushStep> steps;
  long long edits = 0;
  long long gain = 0;
};

// While some vertex v outside M has degree < n-m-1 - mu*n (lowest index
// first), replace its neighbourhood by everything outside M and v. Requires
// the input to satisfy the K_r constraint. The result is re-checked on every
// call (std::logic_error if any check fails): the constraint still holds,
// edges never decreased (equality iff no step ran), every non-M vertex ends
// at degree >= n-m-1 - mu*n, and either gain > mu^2 n^2 or edits <= mu n^2.
// All threshold comparisons are exact rational arithmetic.
PushTrace push(const Instance& inst, const Rational& mu);

// While some vertex outside M has degree exactly n-m-1 and at least one
// neighbour in M (lowest index first), replace its neighbourhood by
// everything outside M and v. Requires the K_r constraint and all non-M
// degrees >= n-m-1. Preserves the edge count exactly at every step; the
// result has no vertex outside M with both degree n-m-1 and an M-neighbour.
Instance redirect(const Instance& inst);

struct XResult {
  VertexSet X;
  bool certified = false;  // every x in X had degree >= n-m - nu^2 n
  long long bound = 0;     // floor((1+nu)(r-2)m); guaranteed when certified
};

// X = vertices outside M with at least max(1, nu*n) neighbours in M. When
// additionally every x in X has degree >= n-m - nu^2 n the result is
// certified and |X| <= (1+nu)(r-2)m is asserted (std::logic_error if it
// were to fail); otherwise X is returned with certified = false.
XResult compute_X(const Instance& inst, const Rational& nu);

struct Peeling {
  std::vector<VertexSet> cliques;  // pairwise disjoint, in removal order
  std::vector<int> sizes;
  int total = 0;  // sum of sizes
};

// Greedily removes a maximum clique of the residual graph while its size is
// at least r; the residual graph ends up K_r-free. Ties are broken
// lexicographically (via max_clique), so the peeling is deterministic.
// The cliques never meet M (checked, std::logic_error).
Peeling peel(const Instance& inst);

// The counting bound sum_i C(p_i,2) + sum_{i<j} (p_i-1) p_j
// + (p-k)(n-m-p) + m k (r-2) + turan_number(r-1, n-p) where p = sum sizes
// and k = #sizes; the empty tuple gives turan_number(r-1, n).
long long g_value(int n, int m, int r, const std::vector<int>& sizes);

// The telescoped form
//   turan_number(r-1, n)
//     - sum_i sum_{j=0}^{p_i-r} (m - floor((n - (p - j - suffix_i))/(r-1)) - 1)
// with suffix_i = sum_{l>i} p_l. Only defined for n <= (r-1)m (where every
// summand is positive); equals g_value on that domain.
long long largem_bound(int n, int m, int r, const std::vector<int>& sizes);

// Rewires vertex v of a family member (v outside M, currently joined to
// exactly everything outside M) to the given n-m-1 vertices, at least one of
// them in M. Returns true iff the modified graph still satisfies the K_r
// constraint; in that case the modified graph is itself a family member
// (asserted, std::logic_error). Precondition violations throw
// std::invalid_argument with a distinct message each.
bool seq_check(const FamilyMember& member, int v, const VertexSet& new_neighbourhood);

}  // namespace turmlab
