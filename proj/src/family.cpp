#include "turmlab/family.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "turmlab/clique.hpp"

namespace turmlab {

namespace {

void check_rnm(const char* who, int r, long long n, long long m) {
  std::string w(who);
  if (r < 3) throw std::invalid_argument(w + ": requires r >= 3");
  if (n < 0) throw std::invalid_argument(w + ": requires n >= 0");
  if (m < 0 || m > n) throw std::invalid_argument(w + ": requires 0 <= m <= n");
}

std::vector<int> class_sizes(int parts, int n) {
  std::vector<int> sizes(parts);
  int q = n / parts, rem = n % parts;
  for (int i = 0; i < parts; ++i) sizes[i] = q + (i < rem ? 1 : 0);
  return sizes;
}

}  // namespace

Graph turan_graph(int parts, int n) {
  if (parts < 1) throw std::invalid_argument("turan_graph: requires parts >= 1");
  if (n < 0) throw std::invalid_argument("turan_graph: requires n >= 0");
  Graph g(n);
  std::vector<int> cls(n);
  int v = 0, c = 0;
  for (int s : class_sizes(parts, n)) {
    for (int i = 0; i < s; ++i, ++v) cls[v] = c;
    ++c;
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (cls[a] != cls[b]) g.add_edge(a, b);
  return g;
}

long long turan_number(int parts, long long n) {
  if (parts < 1) throw std::invalid_argument("turan_number: requires parts >= 1");
  if (n < 0) throw std::invalid_argument("turan_number: requires n >= 0");
  long long q = n / parts, rem = n % parts;
  long long sq = rem * (q + 1) * (q + 1) + (parts - rem) * q * q;
  return (n * n - sq) / 2;
}

long long turm_number(int r, long long n, long long m) {
  check_rnm("turm_number", r, n, m);
  if (n <= (long long)(r - 1) * m) return turan_number(r - 1, n);
  return n * (n - 1) / 2 - n * m + (long long)(r - 1) * (m + 1) * m / 2;
}

void FamilySpec::validate() const {
  check_rnm("FamilySpec", r, n, m);
  if (n <= (long long)(r - 1) * m)
    throw std::invalid_argument("FamilySpec: requires n > (r-1)*m");
  if ((int)placement.size() != r - 1)
    throw std::invalid_argument("FamilySpec: placement must have r-1 entries");
  long long sum = 0;
  for (int p : placement) {
    if (p < 0) throw std::invalid_argument("FamilySpec: placement entries must be nonnegative");
    sum += p;
  }
  if (sum != m) throw std::invalid_argument("FamilySpec: placement must sum to m");
  std::set<int> seen;
  for (int k : kept_sporadic) {
    if (k < 1 || k > r - 1)
      throw std::invalid_argument("FamilySpec: kept_sporadic indices must lie in 1..r-1");
    if (!seen.insert(k).second)
      throw std::invalid_argument("FamilySpec: kept_sporadic indices must be distinct");
  }
  if ((long long)kept_sporadic.size() > n - (long long)(r - 1) * m)
    throw std::invalid_argument("FamilySpec: too many kept sporadic vertices (|K| > n-(r-1)m)");
}

FamilyMember build_member(const FamilySpec& spec) {
  spec.validate();
  const int r = spec.r, n = spec.n, m = spec.m;
  const int classes = r - 1;

  // class id per vertex; -1 for sporadic vertices, -2 for the tail joined to
  // everything outside M
  std::vector<int> cls(n, -2);
  int v = 0;
  for (int c = 0; c < classes; ++c)
    for (int i = 0; i < spec.placement[c]; ++i) cls[v++] = c;
  for (int c = 0; c < classes; ++c)
    for (int i = 0; i < m - spec.placement[c]; ++i) cls[v++] = c;
  std::vector<int> sporadic_class;  // parallel to the sporadic vertex ids
  for (int k : spec.kept_sporadic) {
    cls[v] = -1;
    sporadic_class.push_back(k - 1);
    ++v;
  }
  const int first_sporadic = classes * m;
  const int num_sporadic = (int)spec.kept_sporadic.size();

  Graph g(n);
  VertexSet M = VertexSet::range(n, 0, m);
  auto own_class = [&](int sp) { return sporadic_class[sp - first_sporadic]; };
  (void)num_sporadic;
  // ids are ordered class < sporadic < tail, so with a < b only these cases arise
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      bool edge;
      if (cls[a] >= 0 && cls[b] >= 0) edge = cls[a] != cls[b];
      else if (cls[b] == -1) edge = cls[a] != own_class(b);  // sporadic avoids its class only
      else edge = !M.test(a);                                // tail avoids M only
      if (edge) g.add_edge(a, b);
    }
  }

  FamilyMember member{{std::move(g), std::move(M), r}, spec};
  if (member.instance.graph.edge_count() != turm_number(r, n, m))
    throw std::logic_error("build_member: edge count mismatch");
  return member;
}

namespace {

// Normal form of a spec: a sporadic vertex of a class equal to M is
// indistinguishable from a tail vertex, so its kept flag is dropped; classes
// are then sorted by (placement, kept) descending. Two members are
// isomorphic fixing M exactly when their normal forms agree.
using NormalForm = std::vector<std::pair<int, bool>>;

NormalForm normalize(const FamilySpec& spec) {
  NormalForm nf;
  std::vector<bool> kept(spec.r, false);
  for (int k : spec.kept_sporadic) kept[k] = true;
  for (int c = 0; c < spec.r - 1; ++c) {
    bool kc = kept[c + 1];
    if (spec.placement[c] == spec.m) kc = false;
    nf.emplace_back(spec.placement[c], kc);
  }
  std::sort(nf.begin(), nf.end(), std::greater<>());
  return nf;
}

FamilySpec spec_of(int r, int n, int m, const NormalForm& nf) {
  FamilySpec s{r, n, m, {}, {}};
  for (int c = 0; c < r - 1; ++c) {
    s.placement.push_back(nf[c].first);
    if (nf[c].second) s.kept_sporadic.push_back(c + 1);
  }
  return s;
}

void compositions(int total, int parts, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if ((int)cur.size() == parts - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(total - v, parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FamilyMember> enumerate_members(int r, int n, int m) {
  check_rnm("enumerate_members", r, n, m);
  if (n <= (long long)(r - 1) * m) {
    FamilyMember t{{turan_graph(r - 1, n), VertexSet::range(n, 0, m), r}, std::nullopt};
    return {std::move(t)};
  }
  if (r - 1 > 20) throw std::out_of_range("enumerate_members: r too large to enumerate");
  std::vector<std::vector<int>> placements;
  std::vector<int> cur;
  compositions(m, r - 1, cur, placements);
  const long long max_kept = std::min<long long>(r - 1, n - (long long)(r - 1) * m);
  std::set<NormalForm> forms;
  for (const auto& pl : placements) {
    for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
      if (std::popcount(mask) > max_kept) continue;
      FamilySpec s{r, n, m, pl, {}};
      for (int c = 0; c < r - 1; ++c)
        if ((mask >> c) & 1) s.kept_sporadic.push_back(c + 1);
      forms.insert(normalize(s));
    }
  }
  std::vector<FamilyMember> out;
  out.reserve(forms.size());
  for (const auto& nf : forms) out.push_back(build_member(spec_of(r, n, m, nf)));
  return out;
}

namespace {

// G restricted to W must be complete multipartite with independent parts of
// size m or m+1: parts are the components of the complement, and the edge
// count pins completeness.
struct PartCheck {
  bool ok = false;
  std::vector<int> sizes;
};

PartCheck multipartite_parts(const Graph& g, const VertexSet& w) {
  PartCheck pc;
  VertexSet todo = w;
  long long inside = 0;
  while (!todo.empty()) {
    int s = todo.first();
    VertexSet comp(g.vertex_count());
    comp.set(s);
    todo.reset(s);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      int v = frontier.first();
      frontier.reset(v);
      VertexSet nb = todo.minus(g.neighbours(v));  // complement neighbours in W
      comp |= nb;
      frontier |= nb;
      todo = todo.minus(nb);
    }
    // parts must be independent in g
    for (int v = comp.first(); v >= 0; v = comp.next(v))
      if (g.neighbours(v).intersects(comp)) return pc;
    pc.sizes.push_back(comp.count());
  }
  long long cross = 0;
  for (std::size_t i = 0; i < pc.sizes.size(); ++i)
    for (std::size_t j = i + 1; j < pc.sizes.size(); ++j)
      cross += (long long)pc.sizes[i] * pc.sizes[j];
  for (int v = w.first(); v >= 0; v = w.next(v))
    inside += (g.neighbours(v) & w).count();
  pc.ok = (inside / 2 == cross);
  return pc;
}

}  // namespace

bool is_member(const Instance& inst) {
  const int n = inst.n(), m = inst.m(), r = inst.r;
  if (r < 3) throw std::invalid_argument("is_member: requires r >= 3");
  if (find_kr_touching(inst)) return false;
  const long long e = inst.graph.edge_count();

  if (n <= (long long)(r - 1) * m) {
    // the single member is the Turan graph; M plays no structural role
    if (e != turan_number(r - 1, n)) return false;
    auto pc = multipartite_parts(inst.graph, VertexSet::full(n));
    return pc.ok && (int)pc.sizes.size() <= r - 1;
  }

  if (e != turm_number(r, n, m)) return false;
  // tail vertices: degree n-m-1 and no neighbour in M, hence joined to
  // exactly everything outside M
  VertexSet tail(n);
  for (int v = 0; v < n; ++v) {
    if (inst.M.test(v)) continue;
    if (inst.graph.degree(v) == n - m - 1 && !inst.graph.neighbours(v).intersects(inst.M))
      tail.set(v);
  }
  VertexSet w = tail.complement();
  const int kprime = w.count() - (r - 1) * m;
  if (kprime < 0 || kprime > r - 1) return false;
  auto pc = multipartite_parts(inst.graph, w);
  if (!pc.ok) return false;
  int big = 0;
  for (int sz : pc.sizes) {
    if (sz == m + 1) ++big;
    else if (sz != m) return false;
  }
  if (big != kprime) return false;
  const int visible = m > 0 ? r - 1 : kprime;
  return (int)pc.sizes.size() == visible;
}

}  // namespace turmlab
