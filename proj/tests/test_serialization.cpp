#include <doctest.h>

#include <json.hpp>
#include <random>
#include <stdexcept>
#include <string>

#include "brute.hpp"
#include "turmlab/document.hpp"
#include "turmlab/family.hpp"
#include "turmlab/graph6.hpp"
#include "turmlab/oracle.hpp"

using turmlab::Graph;
using turmlab::Instance;
using turmlab::VertexSet;

TEST_SUITE("graph6") {
  TEST_CASE("known encodings") {
    CHECK(turmlab::to_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");
    CHECK(turmlab::to_graph6(turmlab::turan_graph(3, 3)) == "Bw");
    CHECK(turmlab::to_graph6(turmlab::turan_graph(4, 4)) == "C~");
    CHECK(turmlab::to_graph6(turmlab::turan_graph(2, 4)) == "C]");
    CHECK(turmlab::to_graph6(Graph(0)) == "?");
    CHECK(turmlab::to_graph6(Graph(1)) == "@");
    CHECK(turmlab::to_graph6(Graph(5)) == "D??");
    CHECK(turmlab::from_graph6("C]") == turmlab::turan_graph(2, 4));
  }

  TEST_CASE("round trip on random graphs") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = static_cast<int>(rng() % 13);
      Graph g = brute::random_graph(rng, n, 50);
      CHECK(turmlab::from_graph6(turmlab::to_graph6(g)) == g);
    }
    Graph big = brute::random_graph(rng, 62, 50);
    CHECK(turmlab::from_graph6(turmlab::to_graph6(big)) == big);
  }

  TEST_CASE("malformed inputs") {
    CHECK_THROWS_WITH_AS(turmlab::from_graph6(""), "graph6: empty string",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(turmlab::from_graph6(">"), "graph6: bad size byte",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(turmlab::from_graph6("A"), "graph6: wrong length",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(turmlab::from_graph6("A__"), "graph6: wrong length",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(turmlab::from_graph6("A "), "graph6: bad character",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(turmlab::from_graph6("A`"), "graph6: nonzero padding",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(turmlab::from_graph6("~??"), "graph6: only n <= 62 supported",
                         std::out_of_range);
    Graph too_big(63);
    CHECK_THROWS_WITH_AS(turmlab::to_graph6(too_big), "graph6: only n <= 62 supported",
                         std::out_of_range);
  }
}

TEST_SUITE("document") {
  TEST_CASE("round trip") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 100; ++trial) {
      Instance inst;
      const int n = static_cast<int>(rng() % 10);
      inst.graph = brute::random_graph(rng, n, 50);
      inst.r = 3 + static_cast<int>(rng() % 3);
      inst.M = VertexSet(n);
      for (int v = 0; v < n; ++v)
        if (rng() % 3 == 0) inst.M.set(v);
      CHECK(turmlab::parse_instance(turmlab::serialize_instance(inst)) == inst);
    }
    auto mem = turmlab::build_member({3, 6, 1, {1, 0}, {}});
    std::string text = turmlab::serialize_instance(mem.instance);
    CHECK(text.find("\"Ej\\\\w\"") != std::string::npos);  // graph6, JSON-escaped
    CHECK(turmlab::parse_instance(text) == mem.instance);
  }

  TEST_CASE("edge-list and graph6 payloads agree") {
    std::string as_edges =
        R"({"format_version":1,"r":3,"n":4,"M":[0],"graph":[[0,1],[2,3]]})";
    std::string as_g6 = turmlab::serialize_instance(turmlab::parse_instance(as_edges));
    Instance a = turmlab::parse_instance(as_edges);
    Instance b = turmlab::parse_instance(as_g6);
    CHECK(a == b);
    CHECK(a.graph.has_edge(0, 1));
    CHECK(a.graph.has_edge(2, 3));
    CHECK(a.graph.edge_count() == 2);
  }

  TEST_CASE("parse failures") {
    using turmlab::parse_instance;
    CHECK_THROWS_AS(parse_instance("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_instance("[1,2]"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_instance(R"({"format_version":1,"r":3,"n":2,"M":[]})"),
        "document: missing field 'graph'", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_instance(R"({"format_version":2,"r":3,"n":0,"M":[],"graph":"?"})"),
        "document: unsupported format_version", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_instance(R"({"format_version":1,"r":2,"n":0,"M":[],"graph":"?"})"),
        "document: requires r >= 3", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_instance(R"({"format_version":1,"r":3,"n":3,"M":[],"graph":"A_"})"),
        "document: graph6 payload does not have n vertices", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_instance(R"({"format_version":1,"r":3,"n":2,"M":[2],"graph":"A_"})"),
        "document: M entry out of range", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_instance(R"({"format_version":1,"r":3,"n":2,"M":[0,0],"graph":"A_"})"),
        "document: M entries must be distinct", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_instance(R"({"format_version":1,"r":3,"n":2,"M":[],"graph":[[0,0]]})"),
        "document: edge endpoints out of range", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_instance(R"({"format_version":1,"r":3,"n":2,"M":[],"graph":[[0]]})"),
        "document: edges must be [u,v] integer pairs", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_instance(R"({"format_version":1,"r":3,"n":2,"M":[],"graph":7})"),
        "document: graph must be a graph6 string or edge list", std::invalid_argument);
  }

  TEST_CASE("dot rendering marks M") {
    Instance inst{Graph::from_edges(3, {{0, 1}, {1, 2}}), VertexSet::single(3, 0), 3};
    std::string dot = turmlab::to_dot(inst);
    CHECK(dot.find("style=filled") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("1 -- 2") != std::string::npos);
  }

  TEST_CASE("oracle and scan reports serialize deterministically") {
    auto res = turmlab::max_edges_exhaustive(3, 5, 1);
    auto j = nlohmann::json::parse(turmlab::oracle_result_json(res));
    CHECK(j["r"] == 3);
    CHECK(j["n"] == 5);
    CHECK(j["m"] == 1);
    CHECK(j["max_edges"] == res.max_edges);
    REQUIRE(j["extremal"].size() == res.extremal.size());
    for (std::size_t i = 0; i < res.extremal.size(); ++i)
      CHECK(turmlab::from_graph6(j["extremal"][i].get<std::string>()) ==
            res.extremal[i]);

    auto rep = turmlab::stability_scan(3, 6, 1, 1);
    auto js = nlohmann::json::parse(turmlab::scan_report_json(rep));
    CHECK(js["max_slack"] == 1);
    REQUIRE(js["rows"].size() == 2);
    CHECK(js["rows"][0]["deficiency"] == 0);
    CHECK(js["rows"][0]["min_distance"] == 0);
    CHECK(js["rows"][1]["graph_count"] == rep.rows[1].graph_count);
  }
}
