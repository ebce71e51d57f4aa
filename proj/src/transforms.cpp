#include "turmlab/transforms.hpp"

#include <stdexcept>
#include <string>

#include "turmlab/clique.hpp"

namespace turmlab {

namespace {

using Wide = __int128;

VertexSet all_but_m_and(const VertexSet& M, int v) {
  VertexSet nb = VertexSet::full(M.universe()).minus(M);
  nb.reset(v);
  return nb;
}

}  // namespace

PushTrace push(const Instance& inst, const Rational& mu) {
  if (!mu.less_than_one()) throw std::invalid_argument("push: mu must lie in [0,1)");
  if (find_kr_touching(inst))
    throw std::invalid_argument("push: input violates the K_r constraint");
  const int n = inst.n(), m = inst.m();
  const long long num = mu.num, den = mu.den;

  PushTrace tr{inst, {}, 0, 0};
  Graph& g = tr.result.graph;
  const VertexSet& M = tr.result.M;
  // deg < n-m-1 - mu*n, cross-multiplied by den
  auto low = [&](int v) {
    return (Wide)den * g.degree(v) < (Wide)den * (n - m - 1) - (Wide)num * n;
  };
  for (;;) {
    int v = -1;
    for (int u = 0; u < n && v < 0; ++u)
      if (!M.test(u) && low(u)) v = u;
    if (v < 0) break;
    PushStep st{v, g.neighbours(v), all_but_m_and(M, v)};
    tr.edits += (st.old_neighbourhood ^ st.new_neighbourhood).count();
    g.set_neighbourhood(v, st.new_neighbourhood);
    tr.steps.push_back(std::move(st));
  }
  tr.gain = g.edge_count() - inst.graph.edge_count();

  if (find_kr_touching(tr.result)) throw std::logic_error("push: constraint lost");
  if (tr.gain < 0 || (tr.gain == 0) != tr.steps.empty() ||
      (tr.steps.empty() && !(tr.result == inst)))
    throw std::logic_error("push: edge gain check failed");
  if (tr.edits < tr.gain) throw std::logic_error("push: edits below gain");
  const Wide nn = (Wide)n * n;
  if (!((Wide)tr.gain * den * den > (Wide)num * num * nn ||
        (Wide)tr.edits * den <= (Wide)num * nn))
    throw std::logic_error("push: gain/near dichotomy failed");
  for (int u = 0; u < n; ++u)
    if (!M.test(u) && low(u)) throw std::logic_error("push: degree floor not reached");
  return tr;
}

Instance redirect(const Instance& inst) {
  const int n = inst.n(), m = inst.m();
  for (int v = 0; v < n; ++v)
    if (!inst.M.test(v) && inst.graph.degree(v) < n - m - 1)
      throw std::invalid_argument("redirect: a vertex outside M has degree below n-m-1");
  if (find_kr_touching(inst))
    throw std::invalid_argument("redirect: input violates the K_r constraint");

  Instance out = inst;
  Graph& g = out.graph;
  const long long e0 = g.edge_count();
  for (;;) {
    int v = -1;
    for (int u = 0; u < n && v < 0; ++u)
      if (!out.M.test(u) && g.degree(u) == n - m - 1 && g.neighbours(u).intersects(out.M))
        v = u;
    if (v < 0) break;
    g.set_neighbourhood(v, all_but_m_and(out.M, v));
    if (g.edge_count() != e0) throw std::logic_error("redirect: edge count drifted");
  }
  if (find_kr_touching(out)) throw std::logic_error("redirect: constraint lost");
  return out;
}

XResult compute_X(const Instance& inst, const Rational& nu) {
  if (!nu.less_than_one()) throw std::invalid_argument("compute_X: nu must lie in [0,1)");
  if (find_kr_touching(inst))
    throw std::invalid_argument("compute_X: input violates the K_r constraint");
  const int n = inst.n(), m = inst.m();
  const long long num = nu.num, den = nu.den;

  XResult res{VertexSet(n), true, 0};
  for (int v = 0; v < n; ++v) {
    if (inst.M.test(v)) continue;
    int in_m = (inst.graph.neighbours(v) & inst.M).count();
    if (in_m >= 1 && (Wide)den * in_m >= (Wide)num * n) res.X.set(v);
  }
  for (int v = res.X.first(); v >= 0; v = res.X.next(v)) {
    // deg >= n-m - nu^2 n, cross-multiplied by den^2
    if ((Wide)den * den * inst.graph.degree(v) <
        (Wide)den * den * (n - m) - (Wide)num * num * n) {
      res.certified = false;
      break;
    }
  }
  res.bound = (long long)((Wide)(den + num) * (inst.r - 2) * m / den);
  if (res.certified &&
      (Wide)den * res.X.count() > (Wide)(den + num) * (inst.r - 2) * m)
    throw std::logic_error("compute_X: size bound failed");
  return res;
}

Peeling peel(const Instance& inst) {
  if (find_kr_touching(inst))
    throw std::invalid_argument("peel: input violates the K_r constraint");
  Peeling out;
  VertexSet rest = VertexSet::full(inst.n());
  for (;;) {
    VertexSet p = max_clique(inst.graph, rest);
    if (p.count() < inst.r) break;
    if (p.intersects(inst.M)) throw std::logic_error("peel: clique met M");
    out.sizes.push_back(p.count());
    out.total += p.count();
    rest = rest.minus(p);
    out.cliques.push_back(std::move(p));
  }
  return out;
}

namespace {

long long check_g_args(const char* who, int n, int m, int r,
                       const std::vector<int>& sizes) {
  std::string w(who);
  if (r < 3) throw std::invalid_argument(w + ": requires r >= 3");
  if (m < 0 || m > n) throw std::invalid_argument(w + ": requires 0 <= m <= n");
  long long p = 0;
  for (int s : sizes) {
    if (s < r) throw std::invalid_argument(w + ": sizes entries must be at least r");
    p += s;
  }
  if (p > n) throw std::invalid_argument(w + ": sizes exceed the vertex count");
  return p;
}

}  // namespace

long long g_value(int n, int m, int r, const std::vector<int>& sizes) {
  const long long p = check_g_args("g_value", n, m, r, sizes);
  const long long k = (long long)sizes.size();
  long long val = 0;
  for (int s : sizes) val += (long long)s * (s - 1) / 2;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (std::size_t j = i + 1; j < sizes.size(); ++j)
      val += (long long)(sizes[i] - 1) * sizes[j];
  val += (p - k) * ((long long)n - m - p);
  val += (long long)m * k * (r - 2);
  val += turan_number(r - 1, n - p);
  return val;
}

long long largem_bound(int n, int m, int r, const std::vector<int>& sizes) {
  const long long p = check_g_args("largem_bound", n, m, r, sizes);
  if (n > (long long)(r - 1) * m)
    throw std::invalid_argument("largem_bound: requires n <= (r-1)*m");
  long long val = turan_number(r - 1, n);
  long long suffix = 0;  // sum of the sizes after position i
  for (int i = (int)sizes.size() - 1; i >= 0; --i) {
    for (int j = 0; j <= sizes[i] - r; ++j) {
      long long inner = n - (p - j - suffix);  // >= n - p >= 0
      val -= m - inner / (r - 1) - 1;
    }
    suffix += sizes[i];
  }
  return val;
}

bool seq_check(const FamilyMember& member, int v, const VertexSet& new_neighbourhood) {
  const Instance& in = member.instance;
  const int n = in.n(), m = in.m(), r = in.r;
  if ((long long)n <= (long long)(r - 1) * m)
    throw std::invalid_argument("seq_check: requires n > (r-1)*m");
  if (v < 0 || v >= n) throw std::invalid_argument("seq_check: vertex out of range");
  if (in.M.test(v)) throw std::invalid_argument("seq_check: v must lie outside M");
  if (!(in.graph.neighbours(v) == all_but_m_and(in.M, v)))
    throw std::invalid_argument("seq_check: v must be joined to exactly everything outside M");
  if (new_neighbourhood.universe() != n || new_neighbourhood.test(v))
    throw std::invalid_argument("seq_check: new neighbourhood must live in V minus v");
  if (new_neighbourhood.count() != n - m - 1)
    throw std::invalid_argument("seq_check: new neighbourhood must have n-m-1 vertices");
  if (!new_neighbourhood.intersects(in.M))
    throw std::invalid_argument("seq_check: new neighbourhood must meet M");

  Instance mod = in;
  mod.graph.set_neighbourhood(v, new_neighbourhood);
  if (find_kr_touching(mod)) return false;
  if (!is_member(mod)) throw std::logic_error("seq_check: modified graph left the family");
  return true;
}

}  // namespace turmlab
