#include "turmlab/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "turmlab/canonical.hpp"
#include "turmlab/clique.hpp"
#include "turmlab/edit.hpp"
#include "turmlab/family.hpp"

namespace turmlab {

namespace {

void check_args(const char* who, int r, int n, int m, int max_n) {
  std::string w(who);
  if (r < 3) throw std::invalid_argument(w + ": requires r >= 3");
  if (n < 0 || m < 0 || m > n)
    throw std::invalid_argument(w + ": requires 0 <= m <= n");
  if (n > max_n)
    throw std::out_of_range(w + ": n must be at most " + std::to_string(max_n));
}

int resolve_threads(int want) {
  if (want > 0) return want;
  if (const char* env = std::getenv("TURMLAB_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? (int)hc : 1;
}

// Workers pull partition indices from a shared counter; every partition
// writes only to its own result slot, so the merged output is independent
// of scheduling.
template <typename Fn>
void parallel_over(int parts, int threads, Fn fn) {
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < parts; i = next.fetch_add(1)) fn(i);
  };
  if (threads <= 1 || parts <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  int count = std::min(threads, parts);
  pool.reserve((std::size_t)count);
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

struct Params {
  int r = 0, n = 0, m = 0;
  std::uint64_t m_mask = 0;
  std::vector<std::pair<int, int>> edges;  // pairs (u,v), u < v, lexicographic
  int num_edges = 0;
};

Params make_params(int r, int n, int m) {
  Params p;
  p.r = r;
  p.n = n;
  p.m = m;
  p.m_mask = m > 0 ? (std::uint64_t{1} << m) - 1 : 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) p.edges.emplace_back(u, v);
  p.num_edges = (int)p.edges.size();
  return p;
}

// Any violating K_r contains a lexicographically last edge, so checking each
// insertion for a completed r-clique meeting M keeps the whole subtree clean.
bool completes_violation(const Params& p, const std::uint64_t* adj, int u, int v) {
  bool touched = ((p.m_mask >> u) & 1) || ((p.m_mask >> v) & 1);
  return small_graph_clique_touching(adj, p.m_mask, adj[u] & adj[v], p.r - 2, touched);
}

struct PrefixBuilder {
  const Params& p;
  int width;
  std::vector<std::uint64_t> out;
  std::uint64_t adj[64] = {};

  void rec(int idx, std::uint64_t mask) {
    if (idx == width) {
      out.push_back(mask);
      return;
    }
    auto [u, v] = p.edges[idx];
    if (!completes_violation(p, adj, u, v)) {
      adj[u] |= std::uint64_t{1} << v;
      adj[v] |= std::uint64_t{1} << u;
      rec(idx + 1, mask | (std::uint64_t{1} << idx));
      adj[u] &= ~(std::uint64_t{1} << v);
      adj[v] &= ~(std::uint64_t{1} << u);
    }
    rec(idx + 1, mask);
  }
};

// The first `width` edge decisions, include-first order, violating branches
// already pruned. Shared by both phases and all thread counts.
std::vector<std::uint64_t> build_prefixes(const Params& p, int width) {
  PrefixBuilder b{p, width};
  b.rec(0, 0);
  return std::move(b.out);
}

struct PartitionState {
  std::uint64_t adj[64] = {};
  int included = 0;

  PartitionState(const Params& p, std::uint64_t prefix, int width) {
    for (int i = 0; i < width; ++i) {
      if ((prefix >> i) & 1) {
        auto [u, v] = p.edges[i];
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
        ++included;
      }
    }
  }
};

struct MaxSearch {
  const Params& p;
  std::atomic<long long>& best;

  void rec(std::uint64_t* adj, int idx, int included) {
    if ((long long)included + (p.num_edges - idx) <= best.load(std::memory_order_relaxed))
      return;
    if (idx == p.num_edges) {
      long long cur = best.load(std::memory_order_relaxed);
      while (included > cur &&
             !best.compare_exchange_weak(cur, included, std::memory_order_relaxed)) {
      }
      return;
    }
    auto [u, v] = p.edges[idx];
    if (!completes_violation(p, adj, u, v)) {
      adj[u] |= std::uint64_t{1} << v;
      adj[v] |= std::uint64_t{1} << u;
      rec(adj, idx + 1, included + 1);
      adj[u] &= ~(std::uint64_t{1} << v);
      adj[v] &= ~(std::uint64_t{1} << u);
    }
    rec(adj, idx + 1, included);
  }
};

struct CollectResult {
  std::vector<std::uint64_t> masks;  // included-edge bitmasks, DFS order
  unsigned long long nodes = 0;
};

struct CollectSearch {
  const Params& p;
  long long threshold;
  CollectResult& out;

  void rec(std::uint64_t* adj, int idx, int included, std::uint64_t mask) {
    ++out.nodes;
    if ((long long)included + (p.num_edges - idx) < threshold) return;
    if (idx == p.num_edges) {
      out.masks.push_back(mask);
      return;
    }
    auto [u, v] = p.edges[idx];
    if (!completes_violation(p, adj, u, v)) {
      adj[u] |= std::uint64_t{1} << v;
      adj[v] |= std::uint64_t{1} << u;
      rec(adj, idx + 1, included + 1, mask | (std::uint64_t{1} << idx));
      adj[u] &= ~(std::uint64_t{1} << v);
      adj[v] &= ~(std::uint64_t{1} << u);
    }
    rec(adj, idx + 1, included, mask);
  }
};

long long exact_max(const Params& p, const std::vector<std::uint64_t>& prefixes,
                    int width, int threads) {
  std::atomic<long long> best{-1};
  parallel_over((int)prefixes.size(), threads, [&](int i) {
    PartitionState st(p, prefixes[i], width);
    MaxSearch s{p, best};
    s.rec(st.adj, width, st.included);
  });
  return best.load();
}

// Every constraint-satisfying edge set with at least `threshold` edges,
// merged over partitions in index order (bit-identical for any thread count).
CollectResult collect_at_least(const Params& p, const std::vector<std::uint64_t>& prefixes,
                               int width, long long threshold, int threads) {
  std::vector<CollectResult> parts(prefixes.size());
  parallel_over((int)prefixes.size(), threads, [&](int i) {
    PartitionState st(p, prefixes[i], width);
    CollectSearch s{p, threshold, parts[(std::size_t)i]};
    s.rec(st.adj, width, st.included, prefixes[(std::size_t)i]);
  });
  CollectResult merged;
  for (auto& part : parts) {
    merged.nodes += part.nodes;
    merged.masks.insert(merged.masks.end(), part.masks.begin(), part.masks.end());
  }
  return merged;
}

Graph mask_to_graph(const Params& p, std::uint64_t mask) {
  Graph g(p.n);
  for (int i = 0; i < p.num_edges; ++i)
    if ((mask >> i) & 1) g.add_edge(p.edges[i].first, p.edges[i].second);
  return g;
}

std::set<std::uint64_t> canonical_keys(const Params& p, const std::vector<std::uint64_t>& masks) {
  std::set<std::uint64_t> keys;
  for (auto mask : masks) keys.insert(canonical_key(mask_to_graph(p, mask), p.m));
  return keys;
}

int split_width(const Params& p, const OracleOptions& opts) {
  return std::clamp(opts.split_depth, 0, std::min(p.num_edges, 20));
}

}  // namespace

OracleResult max_edges_exhaustive(int r, int n, int m, const OracleOptions& opts) {
  check_args("max_edges_exhaustive", r, n, m, kOracleMaxN);
  const Params p = make_params(r, n, m);
  const int width = split_width(p, opts);
  const int threads = resolve_threads(opts.threads);
  const auto prefixes = build_prefixes(p, width);

  OracleResult res;
  res.r = r;
  res.n = n;
  res.m = m;
  res.max_edges = exact_max(p, prefixes, width, threads);
  CollectResult ties = collect_at_least(p, prefixes, width, res.max_edges, threads);
  res.explored = ties.nodes;
  for (auto key : canonical_keys(p, ties.masks)) res.extremal.push_back(key_to_graph(n, key));
  return res;
}

UniquenessReport verify_uniqueness(int r, int n, int m, const OracleOptions& opts) {
  check_args("verify_uniqueness", r, n, m, kOracleFullEnumN);
  OracleResult oracle = max_edges_exhaustive(r, n, m, opts);
  auto members = enumerate_members(r, n, m);

  UniquenessReport rep;
  rep.oracle_max = oracle.max_edges;
  rep.formula = turm_number(r, n, m);
  rep.oracle_count = oracle.extremal.size();
  rep.family_count = members.size();

  std::set<std::uint64_t> oracle_keys, family_keys;
  for (const auto& g : oracle.extremal) oracle_keys.insert(canonical_key(g, m));
  for (const auto& fm : members) family_keys.insert(canonical_key(fm.instance.graph, m));
  rep.m_preserving = oracle_keys == family_keys;

  bool sets_agree = rep.m_preserving;
  if (!sets_agree) {
    std::set<std::uint64_t> ow, fw;  // unrestricted relabellings
    for (const auto& g : oracle.extremal) ow.insert(canonical_key(g, 0));
    for (const auto& fm : members) fw.insert(canonical_key(fm.instance.graph, 0));
    sets_agree = ow == fw;
  }
  rep.ok = rep.oracle_max == rep.formula && sets_agree;
  return rep;
}

std::vector<Graph> near_extremal(int r, int n, int m, long long slack,
                                 const OracleOptions& opts) {
  check_args("near_extremal", r, n, m, kOracleFullEnumN);
  if (slack < 0) throw std::invalid_argument("near_extremal: slack must be nonnegative");
  const Params p = make_params(r, n, m);
  const int width = split_width(p, opts);
  const int threads = resolve_threads(opts.threads);
  const auto prefixes = build_prefixes(p, width);

  long long threshold = std::max<long long>(0, turm_number(r, n, m) - slack);
  CollectResult hits = collect_at_least(p, prefixes, width, threshold, threads);
  std::vector<Graph> out;
  for (auto key : canonical_keys(p, hits.masks)) out.push_back(key_to_graph(n, key));
  return out;
}

ScanReport stability_scan(int r, int n, int m, int max_slack, const OracleOptions& opts) {
  check_args("stability_scan", r, n, m, kOracleFullEnumN);
  if (max_slack < 0) throw std::invalid_argument("stability_scan: max_slack must be nonnegative");
  const Params p = make_params(r, n, m);
  const int width = split_width(p, opts);
  const int threads = resolve_threads(opts.threads);
  const auto prefixes = build_prefixes(p, width);

  const long long formula = turm_number(r, n, m);
  const long long threshold = std::max<long long>(0, formula - max_slack);
  CollectResult hits = collect_at_least(p, prefixes, width, threshold, threads);

  // Group the isomorphism classes by deficiency.
  std::map<int, std::set<std::uint64_t>> by_deficiency;
  for (auto mask : hits.masks) {
    long long e = std::popcount(mask);
    if (e > formula)
      throw std::logic_error("stability_scan: edge count above the formula bound");
    if (formula - e > max_slack) continue;  // below-threshold masks are never emitted
    by_deficiency[(int)(formula - e)].insert(canonical_key(mask_to_graph(p, mask), m));
  }

  const bool case_two = (long long)n > (long long)(r - 1) * m;
  std::vector<Graph> targets;
  if (case_two) {
    for (const auto& fm : enumerate_members(r, n, m)) targets.push_back(fm.instance.graph);
  } else {
    targets.push_back(turan_graph(r - 1, n));
  }
  const VertexSet preserve =
      case_two ? VertexSet::range(n, 0, m) : VertexSet(n);

  ScanReport rep;
  rep.r = r;
  rep.n = n;
  rep.m = m;
  rep.max_slack = max_slack;
  for (int d = 0; d <= max_slack; ++d) {
    ScanRow row;
    row.deficiency = d;
    auto it = by_deficiency.find(d);
    if (it == by_deficiency.end() || it->second.empty()) {
      row.min_distance = row.max_distance = -1;
      rep.rows.push_back(row);
      continue;
    }
    row.graph_count = (long long)it->second.size();
    row.min_distance = -1;
    row.max_distance = -1;
    for (auto key : it->second) {
      Graph g = key_to_graph(n, key);
      long long dist = -1;
      for (const auto& t : targets) {
        EditDistance ed = edit_distance_iso(g, t, preserve);
        if (dist < 0 || ed.edits < dist) dist = ed.edits;
      }
      if (row.min_distance < 0 || dist < row.min_distance) row.min_distance = dist;
      if (dist > row.max_distance) row.max_distance = dist;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace turmlab
