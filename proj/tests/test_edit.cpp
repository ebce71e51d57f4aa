#include <doctest.h>

#include <random>
#include <stdexcept>

#include "brute.hpp"
#include "turmlab/edit.hpp"
#include "turmlab/family.hpp"

using turmlab::Graph;
using turmlab::VertexSet;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_SUITE("edit") {
  TEST_CASE("labelled edit count") {
    Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(turmlab::edit_count_labelled(c4, c4) == 0);
    CHECK(turmlab::edit_count_labelled(c4, p4) == 1);
    CHECK(turmlab::edit_count_labelled(Graph(5), complete(5)) == 10);
    CHECK_THROWS_AS(turmlab::edit_count_labelled(Graph(4), Graph(5)),
                    std::invalid_argument);
  }

  TEST_CASE("distance up to isomorphism on fixed graphs") {
    Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    auto d = turmlab::edit_distance_iso(c4, p4, VertexSet(4));
    CHECK(d.exact);
    CHECK(d.edits == 1);
    CHECK(brute::edit_distance(c4, p4, VertexSet(4)) == 1);

    // Relabelled copies are at distance zero.
    Graph c4b = Graph::from_edges(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
    CHECK(turmlab::edit_distance_iso(c4, c4b, VertexSet(4)).edits == 0);
  }

  TEST_CASE("distance from K33 to the two (3,6,1) members") {
    // M is vertex 0 in all three graphs; distances fix M.
    Graph k33 = turmlab::turan_graph(2, 6);
    VertexSet m = VertexSet::single(6, 0);
    Graph no_sporadic = turmlab::build_member({3, 6, 1, {1, 0}, {}}).instance.graph;
    Graph kept_sporadic = turmlab::build_member({3, 6, 1, {1, 0}, {2}}).instance.graph;

    CHECK(brute::edit_distance(k33, no_sporadic, m) == 6);
    CHECK(turmlab::edit_distance_iso(k33, no_sporadic, m).edits == 6);
    CHECK(brute::edit_distance(k33, kept_sporadic, m) == 4);
    CHECK(turmlab::edit_distance_iso(k33, kept_sporadic, m).edits == 4);
  }

  TEST_CASE("random graphs agree with all-permutation search") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 6);
      Graph g = brute::random_graph(rng, n, 50);
      Graph h = brute::random_graph(rng, n, 50);
      const int m = static_cast<int>(rng() % (n + 1));
      VertexSet preserve = VertexSet::range(n, 0, m);

      auto d = turmlab::edit_distance_iso(g, h, preserve);
      CHECK(d.exact);
      CHECK(d.edits == brute::edit_distance(g, h, preserve));
    }
  }

  TEST_CASE("distance is a metric on labelled-size-5 graphs") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 60; ++trial) {
      Graph a = brute::random_graph(rng, 5, 50);
      Graph b = brute::random_graph(rng, 5, 50);
      Graph c = brute::random_graph(rng, 5, 50);
      VertexSet none(5);
      auto ab = turmlab::edit_distance_iso(a, b, none).edits;
      auto ba = turmlab::edit_distance_iso(b, a, none).edits;
      auto bc = turmlab::edit_distance_iso(b, c, none).edits;
      auto ac = turmlab::edit_distance_iso(a, c, none).edits;
      CHECK(ab == ba);
      CHECK(ac <= ab + bc);
      CHECK(turmlab::edit_distance_iso(a, a, none).edits == 0);
    }
  }

  TEST_CASE("beyond the exact limit the result is an upper bound") {
    std::mt19937_64 rng(23);
    const int n = turmlab::kExactEditDistanceLimit + 2;
    Graph g = brute::random_graph(rng, n, 50);
    Graph h = brute::random_relabel(rng, g, 0);
    auto d = turmlab::edit_distance_iso(g, h, VertexSet(n));
    CHECK_FALSE(d.exact);
    CHECK(d.edits >= 0);
    CHECK(d.edits <= turmlab::edit_count_labelled(g, h));
  }
}
