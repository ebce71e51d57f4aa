// turmlab: build, inspect, transform and exhaustively verify graphs in
// which no r-clique meets a protected vertex set M.
//
// Exit codes: 0 success / constraint holds, 1 constraint violated,
// 2 usage error, 3 out-of-range parameters.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "turmlab/clique.hpp"
#include "turmlab/document.hpp"
#include "turmlab/family.hpp"
#include "turmlab/graph6.hpp"
#include "turmlab/oracle.hpp"
#include "turmlab/rational.hpp"
#include "turmlab/transforms.hpp"

namespace {

using nlohmann::json;
using namespace turmlab;

std::string slurp(const std::string& path) {
  if (path.empty()) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
  out << text;
}

struct BuildArgs {
  int r = 3, n = 0, m = 0, parts = 2;
  bool turan = false;
  std::vector<int> placement;
  std::vector<int> keep;
  std::string out, dot;
};

int run_build(const BuildArgs& a) {
  Instance inst;
  if (a.turan) {
    if (a.m > a.n) throw std::invalid_argument("build: requires m <= n");
    inst.graph = turan_graph(a.parts, a.n);
    inst.M = VertexSet::range(a.n, 0, a.m);
    inst.r = a.parts + 1;
  } else {
    FamilySpec spec{a.r, a.n, a.m, a.placement, a.keep};
    inst = build_member(spec).instance;
  }
  emit(a.out, serialize_instance(inst));
  if (!a.dot.empty()) emit(a.dot, to_dot(inst));
  return 0;
}

struct CheckArgs {
  std::string in;
};

int run_check(const CheckArgs& a) {
  Instance inst = parse_instance(slurp(a.in));
  const long long e = inst.graph.edge_count();
  const long long formula = turm_number(inst.r, inst.n(), inst.m());
  std::cout << "n " << inst.n() << "  m " << inst.m() << "  r " << inst.r << "\n";
  std::cout << "edges      " << e << "\n";
  std::cout << "turm       " << formula << "\n";
  std::cout << "deficiency " << formula - e << "\n";
  auto witness = find_kr_touching(inst);
  if (witness) {
    std::cout << "constraint violated by clique {";
    bool first = true;
    for (int v : witness->elements()) {
      if (!first) std::cout << ",";
      std::cout << v;
      first = false;
    }
    std::cout << "}\n";
    return 1;
  }
  std::cout << "constraint holds\n";
  std::cout << "member     " << (is_member(inst) ? "yes" : "no") << "\n";
  return 0;
}

struct TransformArgs {
  std::string in, out;
  std::string push_mu;
  bool redirect_op = false;
  bool peel_op = false;
};

json set_json(const VertexSet& s) { return json(s.elements()); }

int run_transform(const TransformArgs& a) {
  Instance inst = parse_instance(slurp(a.in));
  json result;
  if (!a.push_mu.empty()) {
    PushTrace tr = push(inst, Rational::parse(a.push_mu));
    json steps = json::array();
    for (const auto& st : tr.steps) {
      json js;
      js["vertex"] = st.vertex;
      js["old"] = set_json(st.old_neighbourhood);
      js["new"] = set_json(st.new_neighbourhood);
      steps.push_back(js);
    }
    result["trace"] = {{"op", "push"},
                       {"mu", a.push_mu},
                       {"steps", steps},
                       {"edits", tr.edits},
                       {"gain", tr.gain}};
    result["document"] = json::parse(serialize_instance(tr.result));
  } else if (a.redirect_op) {
    Instance out = redirect(inst);
    XResult x = compute_X(out, Rational(0, 1));
    result["trace"] = {{"op", "redirect"},
                       {"edges", out.graph.edge_count()},
                       {"X", set_json(x.X)},
                       {"x_certified", x.certified},
                       {"x_bound", x.bound}};
    result["document"] = json::parse(serialize_instance(out));
  } else {
    Peeling p = peel(inst);
    json cliques = json::array();
    for (const auto& c : p.cliques) cliques.push_back(set_json(c));
    json trace = {{"op", "peel"},
                  {"sizes", p.sizes},
                  {"cliques", cliques},
                  {"g_value", g_value(inst.n(), inst.m(), inst.r, p.sizes)}};
    if ((long long)inst.n() <= (long long)(inst.r - 1) * inst.m())
      trace["largem_bound"] = largem_bound(inst.n(), inst.m(), inst.r, p.sizes);
    result["trace"] = trace;
    result["document"] = json::parse(serialize_instance(inst));
  }
  // stdout carries document plus trace; --out receives the bare document so
  // the result can be fed straight back into check or another transform.
  std::cout << result.dump(2) << "\n";
  if (!a.out.empty()) emit(a.out, result["document"].dump(2) + "\n");
  return 0;
}

struct OracleArgs {
  int r = 3, n = 0, m = 0;
  long long slack = -1;
  bool scan = false;
  int threads = 0, split_depth = 12;
  std::string json_out, g6_out;
};

void emit_g6(const std::string& path, const std::vector<Graph>& graphs) {
  std::string text;
  for (const auto& g : graphs) text += to_graph6(g) + "\n";
  emit(path, text);
}

int run_oracle(const OracleArgs& a) {
  OracleOptions opts{a.threads, a.split_depth};
  if (a.scan) {
    int max_slack = a.slack < 0 ? 0 : (int)a.slack;
    ScanReport rep = stability_scan(a.r, a.n, a.m, max_slack, opts);
    std::cout << "scan r " << rep.r << "  n " << rep.n << "  m " << rep.m
              << "  max_slack " << rep.max_slack << "\n";
    std::cout << "deficiency  classes  min_dist  max_dist\n";
    for (const auto& row : rep.rows)
      std::cout << row.deficiency << "  " << row.graph_count << "  "
                << row.min_distance << "  " << row.max_distance << "\n";
    if (!a.json_out.empty()) emit(a.json_out, scan_report_json(rep));
    return 0;
  }
  if (a.slack > 0) {
    auto graphs = near_extremal(a.r, a.n, a.m, a.slack, opts);
    std::cout << "near-extremal classes within slack " << a.slack << ": "
              << graphs.size() << "\n";
    if (!a.json_out.empty()) {
      json doc;
      doc["r"] = a.r;
      doc["n"] = a.n;
      doc["m"] = a.m;
      doc["slack"] = a.slack;
      json list = json::array();
      for (const auto& g : graphs) list.push_back(to_graph6(g));
      doc["graphs"] = list;
      emit(a.json_out, doc.dump(2) + "\n");
    }
    if (!a.g6_out.empty()) emit_g6(a.g6_out, graphs);
    return 0;
  }
  OracleResult res = max_edges_exhaustive(a.r, a.n, a.m, opts);
  std::cout << "max_edges " << res.max_edges << "\n";
  std::cout << "turm      " << turm_number(a.r, a.n, a.m) << "\n";
  std::cout << "extremal  " << res.extremal.size() << "\n";
  std::cout << "explored  " << res.explored << "\n";
  if (a.n <= kOracleFullEnumN) {
    UniquenessReport rep = verify_uniqueness(a.r, a.n, a.m, opts);
    std::cout << "uniqueness " << (rep.ok ? "ok" : "FAILED") << " ("
              << (rep.m_preserving ? "M-preserving" : "relabelling M") << ", family "
              << rep.family_count << ")\n";
  }
  if (!a.json_out.empty()) emit(a.json_out, oracle_result_json(res));
  if (!a.g6_out.empty()) emit_g6(a.g6_out, res.extremal);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact extremal combinatorics of K_r-avoidance around a vertex set M"};
  app.require_subcommand(1);

  BuildArgs b;
  CLI::App* build = app.add_subcommand("build", "construct a family member or Turan graph");
  build->add_option("--r", b.r, "clique order (family member)");
  build->add_option("--n", b.n, "vertex count")->required();
  build->add_option("--m", b.m, "size of M");
  build->add_option("--placement", b.placement, "M vertices per class, comma separated")
      ->delimiter(',');
  build->add_option("--keep-sporadic", b.keep, "1-based sporadic classes to keep")
      ->delimiter(',');
  build->add_flag("--turan", b.turan, "build turan_graph(parts, n) with M = {0..m-1}");
  build->add_option("--parts", b.parts, "class count for --turan");
  build->add_option("--out", b.out, "output file (default stdout)");
  build->add_option("--dot", b.dot, "also write DOT to this file");

  CheckArgs c;
  CLI::App* check = app.add_subcommand("check", "report edge count, constraint and membership");
  check->add_option("--in", c.in, "instance document (default stdin)");

  TransformArgs t;
  CLI::App* transform = app.add_subcommand("transform", "apply push / redirect / peel");
  transform->add_option("--in", t.in, "instance document (default stdin)");
  transform->add_option("--out", t.out, "output file (default stdout)");
  auto* push_opt = transform->add_option("--push", t.push_mu, "degree-raising sweep with slack mu");
  auto* redir_opt = transform->add_flag("--redirect", t.redirect_op, "strip M-neighbours at tight degree");
  auto* peel_opt = transform->add_flag("--peel", t.peel_op, "greedy maximum-clique peeling");
  push_opt->excludes(redir_opt)->excludes(peel_opt);
  redir_opt->excludes(peel_opt);

  OracleArgs o;
  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive verification at small n");
  oracle->add_option("--r", o.r, "clique order")->required();
  oracle->add_option("--n", o.n, "vertex count")->required();
  oracle->add_option("--m", o.m, "size of M")->required();
  oracle->add_option("--slack", o.slack, "near-extremal slack / scan depth");
  oracle->add_flag("--scan", o.scan, "stability scan over deficiencies 0..slack");
  oracle->add_option("--threads", o.threads, "worker threads (default: TURMLAB_THREADS or all)");
  oracle->add_option("--split-depth", o.split_depth, "edge decisions per work partition");
  oracle->add_option("--json", o.json_out, "write the JSON report here");
  oracle->add_option("--g6", o.g6_out, "write the graphs as graph6 lines here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*build) return run_build(b);
    if (*check) return run_check(c);
    if (*transform) {
      if (t.push_mu.empty() && !t.redirect_op && !t.peel_op)
        throw std::invalid_argument("transform: pick one of --push, --redirect, --peel");
      return run_transform(t);
    }
    return run_oracle(o);
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
