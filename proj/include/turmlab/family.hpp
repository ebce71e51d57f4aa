#pragma once

#include <optional>
#include <vector>

#include "turmlab/instance.hpp"

namespace turmlab {

// Complete multipartite graph with `parts` classes of near-equal sizes,
// larger classes first, vertices assigned to classes in contiguous blocks.
Graph turan_graph(int parts, int n);

// Edge count of turan_graph(parts, n), in closed form.
long long turan_number(int parts, long long n);

// Maximum edge count of an n-vertex graph in which no K_r meets a fixed
// m-vertex set:
//   n <= (r-1)m : turan_number(r-1, n)
//   n >  (r-1)m : C(n,2) - n*m + (r-1)*C(m+1,2)
long long turm_number(int r, long long n, long long m);

// Parameters of one extremal family member (the n > (r-1)m branch).
// Classes V_1..V_{r-1} each hold m vertices; placement[i] of them belong to
// M; kept_sporadic lists the 1-based classes whose "joined to everything but
// the own class" vertex survives the deletions.
struct FamilySpec {
  int r = 3;
  int n = 0;
  int m = 0;
  std::vector<int> placement;
  std::vector<int> kept_sporadic;

  // Throws std::invalid_argument naming the violated invariant.
  void validate() const;
};

struct FamilyMember {
  Instance instance;               // M is always {0,...,m-1}
  std::optional<FamilySpec> spec;  // absent for the single n <= (r-1)m member
};

// Builds the member described by spec. Layout: M first (grouped by class),
// then the non-M class vertices class by class, then the kept sporadic
// vertices, then the vertices joined to everything outside M.
FamilyMember build_member(const FamilySpec& spec);

// All members for (r, n, m), deduplicated up to isomorphisms fixing M
// setwise, in a deterministic order. For n <= (r-1)m this is the single
// Turan graph.
std::vector<FamilyMember> enumerate_members(int r, int n, int m);

// Whether inst.graph is a copy of a family member for (inst.r, n, |M|) with
// inst.M in an admissible position. Decided structurally; M may be any set.
bool is_member(const Instance& inst);

}  // namespace turmlab
