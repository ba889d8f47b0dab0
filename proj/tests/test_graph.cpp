#include <doctest.h>

#include <random>

#include "geogrow/errors.hpp"
#include "geogrow/graph.hpp"
#include "geogrow/graph_io.hpp"
#include "helpers.hpp"

using namespace geogrow;

TEST_SUITE("graph") {
  TEST_CASE("from_edges validates") {
    CHECK_THROWS_AS(SimpleGraph::from_edges(3, {{0, 0}}), InputError);
    CHECK_THROWS_AS(SimpleGraph::from_edges(3, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(SimpleGraph::from_edges(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(SimpleGraph::from_edges(-1, {}), InputError);
    const auto g = SimpleGraph::from_edges(4, {{2, 1}, {0, 3}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 2);
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK(g.edges().front() == Edge(0, 3));
  }

  TEST_CASE("star excludes the vertex itself") {
    const auto g = SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {2, 3}});
    CHECK(star(g, 0) == std::vector<Vertex>{1, 2});
    CHECK(star(g, 3) == std::vector<Vertex>{2});
  }

  TEST_CASE("RootedTree rejects non-trees") {
    CHECK_THROWS_AS(RootedTree(SimpleGraph::from_edges(3, {{0, 1}}), 0), InputError);
    CHECK_THROWS_AS(RootedTree(SimpleGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}), 0), InputError);
    CHECK_THROWS_AS(RootedTree(SimpleGraph::from_edges(2, {{0, 1}}), 2), InputError);
    CHECK_NOTHROW(RootedTree(SimpleGraph::from_edges(1, {}), 0));
  }

  TEST_CASE("coalescence merges roots") {
    const RootedTree p2(SimpleGraph::from_edges(2, {{0, 1}}), 0);
    const RootedTree c = coalesce(p2, p2);
    CHECK(c.order() == 3);
    CHECK(c.root() == 0);
    CHECK(c.graph().degree(0) == 2);
    const RootedTree t1 = builtin_tree("mckay-t1");
    const RootedTree big = coalesce(p2, t1);
    CHECK(big.order() == 17);
    CHECK(big.graph().size() == 16);
    CHECK(big.graph().degree(big.root()) == t1.graph().degree(0) + 1);
    // The single vertex is the identity.
    const RootedTree k1(SimpleGraph::from_edges(1, {}), 0);
    CHECK(coalesce(k1, t1).graph() == t1.graph());
  }

  TEST_CASE("complement is an involution and counts edges") {
    std::mt19937 rng(11);
    for (int n = 1; n <= 12; ++n) {
      const auto t = testutil::random_tree(n, rng);
      const auto c = complement(t);
      CHECK(c.size() == n * (n - 1) / 2 - t.size());
      CHECK(complement(c) == t);
    }
  }

  TEST_CASE("line graph") {
    const auto star3 = SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    const auto l = line_graph(star3);
    CHECK(l.order() == 3);
    CHECK(l.size() == 3);
    const auto p4 = SimpleGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(line_graph(p4) == SimpleGraph::from_edges(3, {{0, 1}, {1, 2}}));
    CHECK(line_graph(SimpleGraph::from_edges(3, {})).order() == 0);
  }

  TEST_CASE("delete_vertex and relabel") {
    const auto p3 = SimpleGraph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(delete_vertex(p3, 1).size() == 0);
    CHECK(delete_vertex(p3, 0) == SimpleGraph::from_edges(2, {{0, 1}}));
    const std::vector<Vertex> perm{2, 0, 1};
    CHECK(relabel(p3, perm) == SimpleGraph::from_edges(3, {{2, 0}, {0, 1}}));
  }

  TEST_CASE("f-polynomial counts cliques") {
    const auto k3 = SimpleGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(f_polynomial(k3) == IntPolynomial{1, 3, 3, 1});
    const auto t1 = builtin_tree("mckay-t1").graph();
    CHECK(f_polynomial(t1) == IntPolynomial{1, 16, 15});
    CHECK(f_polynomial(SimpleGraph::from_edges(0, {})) == IntPolynomial{1});
  }

  TEST_CASE("triangles and connectivity") {
    const auto c4 = SimpleGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(is_triangle_free(c4));
    CHECK(is_connected(c4));
    CHECK_FALSE(is_tree(c4));
    const auto k3 = SimpleGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    const auto tri = find_triangle(k3);
    REQUIRE(tri);
    CHECK((*tri)[0] == 0);
    CHECK_FALSE(is_connected(SimpleGraph::from_edges(2, {})));
  }

  TEST_CASE("clique ordering and printing") {
    CHECK(Clique::empty() < Clique::vertex(0));
    CHECK(Clique::vertex(5) < Clique::edge(0, 1));
    CHECK(Clique::edge(3, 1).to_string() == "{1,3}");
    CHECK(Clique::empty().to_string() == "{}");
    CHECK(Clique::edge(1, 3).contains(3));
  }
}
