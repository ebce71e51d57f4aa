#include "turmlab/document.hpp"

#include <set>
#include <stdexcept>

#include <json.hpp>

#include "turmlab/graph6.hpp"

namespace turmlab {

using nlohmann::json;

std::string serialize_instance(const Instance& inst) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["r"] = inst.r;
  doc["n"] = inst.n();
  doc["M"] = inst.M.elements();
  doc["graph"] = to_graph6(inst.graph);
  return doc.dump(2) + "\n";
}

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("document: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("document: expected an object");
  for (const char* key : {"format_version", "r", "n", "M", "graph"})
    if (!doc.contains(key))
      throw std::invalid_argument(std::string("document: missing field '") + key + "'");
  if (!doc["format_version"].is_number_integer() ||
      doc["format_version"].get<int>() != kFormatVersion)
    throw std::invalid_argument("document: unsupported format_version");
  if (!doc["r"].is_number_integer() || !doc["n"].is_number_integer())
    throw std::invalid_argument("document: r and n must be integers");

  const int r = doc["r"].get<int>();
  const int n = doc["n"].get<int>();
  if (r < 3) throw std::invalid_argument("document: requires r >= 3");
  if (n < 0) throw std::invalid_argument("document: requires n >= 0");

  Instance inst;
  inst.r = r;
  const json& jg = doc["graph"];
  if (jg.is_string()) {
    inst.graph = from_graph6(jg.get<std::string>());
    if (inst.graph.vertex_count() != n)
      throw std::invalid_argument("document: graph6 payload does not have n vertices");
  } else if (jg.is_array()) {
    inst.graph = Graph(n);
    for (const json& je : jg) {
      if (!je.is_array() || je.size() != 2 || !je[0].is_number_integer() ||
          !je[1].is_number_integer())
        throw std::invalid_argument("document: edges must be [u,v] integer pairs");
      int u = je[0].get<int>(), v = je[1].get<int>();
      if (u < 0 || u >= n || v < 0 || v >= n || u == v)
        throw std::invalid_argument("document: edge endpoints out of range");
      inst.graph.add_edge(u, v);
    }
  } else {
    throw std::invalid_argument("document: graph must be a graph6 string or edge list");
  }

  if (!doc["M"].is_array()) throw std::invalid_argument("document: M must be an array");
  inst.M = VertexSet(n);
  for (const json& jv : doc["M"]) {
    if (!jv.is_number_integer())
      throw std::invalid_argument("document: M entries must be integers");
    int v = jv.get<int>();
    if (v < 0 || v >= n) throw std::invalid_argument("document: M entry out of range");
    if (inst.M.test(v)) throw std::invalid_argument("document: M entries must be distinct");
    inst.M.set(v);
  }
  return inst;
}

std::string to_dot(const Instance& inst) {
  std::string out = "graph G {\n";
  for (int v = 0; v < inst.n(); ++v) {
    out += "  " + std::to_string(v);
    if (inst.M.test(v)) out += " [style=filled]";
    out += ";\n";
  }
  for (int u = 0; u < inst.n(); ++u)
    for (int v = inst.graph.neighbours(u).next(u); v >= 0;
         v = inst.graph.neighbours(u).next(v))
      out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

std::string oracle_result_json(const OracleResult& res) {
  json doc;
  doc["r"] = res.r;
  doc["n"] = res.n;
  doc["m"] = res.m;
  doc["max_edges"] = res.max_edges;
  doc["explored"] = res.explored;
  json list = json::array();
  for (const auto& g : res.extremal) list.push_back(to_graph6(g));
  doc["extremal"] = list;
  return doc.dump(2) + "\n";
}

std::string scan_report_json(const ScanReport& rep) {
  json doc;
  doc["r"] = rep.r;
  doc["n"] = rep.n;
  doc["m"] = rep.m;
  doc["max_slack"] = rep.max_slack;
  json rows = json::array();
  for (const auto& row : rep.rows) {
    json jr;
    jr["deficiency"] = row.deficiency;
    jr["graph_count"] = row.graph_count;
    jr["min_distance"] = row.min_distance;
    jr["max_distance"] = row.max_distance;
    rows.push_back(jr);
  }
  doc["rows"] = rows;
  return doc.dump(2) + "\n";
}

}  // namespace turmlab
