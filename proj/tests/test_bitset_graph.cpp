#include <doctest.h>

#include <vector>

#include "turmlab/bitset.hpp"
#include "turmlab/graph.hpp"

using turmlab::Graph;
using turmlab::VertexSet;

TEST_SUITE("bitset") {
  TEST_CASE("factories and element access") {
    VertexSet s(70);
    CHECK(s.universe() == 70);
    CHECK(s.empty());
    CHECK(s.count() == 0);

    s.set(0);
    s.set(63);
    s.set(64);
    s.set(69);
    CHECK(s.count() == 4);
    CHECK(s.test(63));
    CHECK(s.test(64));
    CHECK_FALSE(s.test(1));
    CHECK(s.elements() == std::vector<int>{0, 63, 64, 69});

    s.reset(63);
    CHECK_FALSE(s.test(63));
    CHECK(s.count() == 3);

    CHECK(VertexSet::full(5).elements() == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(VertexSet::range(10, 3, 6).elements() == std::vector<int>{3, 4, 5});
    CHECK(VertexSet::single(8, 7).elements() == std::vector<int>{7});
    CHECK(VertexSet::of(6, {5, 1, 3}).elements() == std::vector<int>{1, 3, 5});
    CHECK(VertexSet::range(4, 2, 2).empty());
  }

  TEST_CASE("iteration with first and next") {
    VertexSet s = VertexSet::of(130, {2, 64, 129});
    CHECK(s.first() == 2);
    CHECK(s.next(2) == 64);
    CHECK(s.next(64) == 129);
    CHECK(s.next(129) == -1);
    CHECK(VertexSet(9).first() == -1);
  }

  TEST_CASE("set algebra") {
    VertexSet a = VertexSet::of(8, {0, 1, 2, 5});
    VertexSet b = VertexSet::of(8, {1, 2, 3});
    CHECK((a & b).elements() == std::vector<int>{1, 2});
    CHECK((a | b).elements() == std::vector<int>{0, 1, 2, 3, 5});
    CHECK((a ^ b).elements() == std::vector<int>{0, 3, 5});
    CHECK(a.minus(b).elements() == std::vector<int>{0, 5});
    CHECK(a.complement().elements() == std::vector<int>{3, 4, 6, 7});
    CHECK(a.above(1).elements() == std::vector<int>{2, 5});
    CHECK(a.intersects(b));
    CHECK_FALSE(a.intersects(VertexSet::of(8, {3, 4})));
    CHECK(VertexSet::of(8, {1, 2}).is_subset_of(a));
    CHECK_FALSE(a.is_subset_of(b));

    VertexSet c = a;
    c &= b;
    CHECK(c == (a & b));
  }

  TEST_CASE("lex order compares as sorted vertex lists") {
    VertexSet a = VertexSet::of(6, {0, 3});
    VertexSet b = VertexSet::of(6, {0, 4});
    VertexSet c = VertexSet::of(6, {1, 2});
    CHECK(turmlab::lex_less(a, b));
    CHECK(turmlab::lex_less(a, c));
    CHECK(turmlab::lex_less(b, c));
    CHECK_FALSE(turmlab::lex_less(a, a));
  }
}

TEST_SUITE("graph") {
  TEST_CASE("edges and degrees") {
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);

    g.add_edge(0, 2);
    CHECK(g.edge_count() == 5);
    g.remove_edge(0, 2);
    CHECK(g.edge_count() == 4);
    CHECK(g == Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  }

  TEST_CASE("set_neighbourhood rewires symmetrically") {
    Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}});
    g.set_neighbourhood(0, VertexSet::of(4, {3}));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.has_edge(0, 3));
    CHECK(g.has_edge(3, 0));
    CHECK(g.neighbours(3).test(0));
    CHECK(g.edge_count() == 1);
  }
}
