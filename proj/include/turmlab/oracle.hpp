#pragma once

#include <cstddef>
#include <vector>

#include "turmlab/graph.hpp"

namespace turmlab {

struct OracleOptions {
  int threads = 0;       // 0: TURMLAB_THREADS env var, else hardware concurrency
  int split_depth = 12;  // edge decisions fixed per work partition
};

inline constexpr int kOracleMaxN = 10;      // branch-and-bound reach (max_edges)
inline constexpr int kOracleFullEnumN = 8;  // reach of the collection-based ops

struct OracleResult {
  int r = 0, n = 0, m = 0;
  long long max_edges = 0;
  // M = {0..m-1}; deduplicated up to isomorphisms fixing M setwise and
  // sorted by canonical key, so the list is reproducible.
  std::vector<Graph> extremal;
  // Collection-phase search nodes. Partitioning is independent of the
  // thread count, so this is identical across parallel runs.
  unsigned long long explored = 0;
};

// Maximises the edge count over all graphs on n labelled vertices in which
// no K_r meets M = {0..m-1}, by branch and bound over edge decisions with
// incremental violation pruning, then collects every optimum.
OracleResult max_edges_exhaustive(int r, int n, int m, const OracleOptions& opts = {});

struct UniquenessReport {
  bool ok = false;            // oracle max equals the formula and the sets agree
  bool m_preserving = false;  // the sets agree under M-preserving isomorphism
  long long oracle_max = 0;
  long long formula = 0;
  std::size_t oracle_count = 0;
  std::size_t family_count = 0;
};

// Compares the oracle's extremal set against enumerate_members: first up to
// isomorphisms fixing M setwise, and when that fails up to arbitrary
// isomorphism (reported via m_preserving = false). ok additionally requires
// the oracle maximum to equal turm_number.
UniquenessReport verify_uniqueness(int r, int n, int m, const OracleOptions& opts = {});

// All constraint-satisfying graphs with at least turm_number - slack edges,
// deduplicated up to M-preserving isomorphism, sorted by canonical key.
std::vector<Graph> near_extremal(int r, int n, int m, long long slack,
                                 const OracleOptions& opts = {});

struct ScanRow {
  int deficiency = 0;          // turm_number minus the row's edge count
  long long graph_count = 0;   // isomorphism classes at this deficiency
  long long min_distance = 0;  // -1 on an empty row
  long long max_distance = 0;
};

struct ScanReport {
  int r = 0, n = 0, m = 0, max_slack = 0;
  std::vector<ScanRow> rows;  // deficiencies 0..max_slack in order
};

// For each deficiency d <= max_slack: the near-extremal classes at exactly
// that edge count and their min/max edit distance to the nearest family
// member. For n > (r-1)m the distance fixes M setwise; for n <= (r-1)m the
// single member's structure does not depend on where M sits, so the distance
// minimises over all relabellings.
ScanReport stability_scan(int r, int n, int m, int max_slack,
                          const OracleOptions& opts = {});

}  // namespace turmlab
