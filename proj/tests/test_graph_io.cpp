#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "geogrow/errors.hpp"
#include "geogrow/graph_io.hpp"

using namespace geogrow;

namespace {

std::vector<int> degree_sequence(const SimpleGraph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.rbegin(), d.rend());
  return d;
}

std::size_t error_line(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("graph_io") {
  TEST_CASE("parse with comments and root") {
    const auto spec = parse_edge_list("# a path\np 3\ne 0 1\n\ne 1 2\nr 2\n");
    CHECK(spec.graph.order() == 3);
    CHECK(spec.graph.size() == 2);
    CHECK(spec.root == 2);
  }

  TEST_CASE("parse errors carry line numbers") {
    CHECK(error_line("e 0 1\n") == 1);
    CHECK(error_line("p 3\np 3\n") == 2);
    CHECK(error_line("p 3\ne 0 3\n") == 2);
    CHECK(error_line("p 3\ne 1 1\n") == 2);
    CHECK(error_line("p 3\ne 0 1\ne 1 0\n") == 3);
    CHECK(error_line("p 3\n\n\nx 1\n") == 4);
    CHECK(error_line("p 3\nr 5\n") == 2);
    CHECK(error_line("p -1\n") == 1);
    CHECK(error_line("p 3\ne 0\n") == 2);
    CHECK_THROWS_AS(parse_edge_list("# nothing\n"), ParseError);
  }

  TEST_CASE("format and parse round trip") {
    const auto t = builtin_tree("mckay-t2");
    const auto text = format_edge_list(t.graph(), 0);
    CHECK(text.find("r ") == std::string::npos);
    CHECK(parse_edge_list(text).graph == t.graph());
    const auto rooted = parse_edge_list(format_edge_list(t.graph(), 5));
    CHECK(rooted.root == 5);
  }

  TEST_CASE("builtin trees have the drawn shapes") {
    const auto t1 = builtin_tree("mckay-t1").graph();
    const auto t2 = builtin_tree("mckay-t2").graph();
    CHECK(t1.order() == 16);
    CHECK(t2.order() == 16);
    CHECK(t1.size() == 15);
    CHECK(degree_sequence(t1) == degree_sequence(t2));
    const auto s1 = builtin_tree("godsil-s1");
    const auto s2 = builtin_tree("godsil-s2");
    CHECK(s1.order() == 10);
    CHECK(s1.graph().size() == 9);
    CHECK(s1.graph().degree(s1.root()) == 2);
    CHECK(s2.order() == 10);
    CHECK(degree_sequence(s1.graph()) == std::vector<int>{3, 3, 2, 2, 2, 2, 1, 1, 1, 1});
    CHECK(degree_sequence(s2.graph()) == std::vector<int>{3, 3, 2, 2, 2, 2, 1, 1, 1, 1});
    const auto sigma = builtin_tree("godsil-sigma");
    CHECK(sigma.order() == 7);
    CHECK(sigma.graph().degree(sigma.root()) == 1);
    const auto r1 = builtin_tree("godsil-s1-repaired");
    const auto r2 = builtin_tree("godsil-s2-repaired");
    CHECK(r1.order() == 11);
    CHECK(r2.order() == 11);
    CHECK_THROWS_AS(builtin_tree("nope"), InputError);
  }

  TEST_CASE("parametrised families") {
    CHECK(builtin_graph("k4").graph.size() == 6);
    CHECK(builtin_graph("p5").graph.size() == 4);
    CHECK(builtin_graph("c5").graph.size() == 5);
    CHECK(builtin_graph("e3").graph.size() == 0);
    CHECK(builtin_graph("star3").graph.order() == 4);
    CHECK_THROWS_AS(builtin_graph("c2"), InputError);
    CHECK_THROWS_AS(builtin_graph("k"), InputError);
  }

  TEST_CASE("load_graph accepts names, inline text and files") {
    CHECK(load_graph("p3").graph.size() == 2);
    CHECK(load_graph("p 3; e 0 1; e 1 2").graph.size() == 2);
    CHECK(load_graph("p 2\\ne 0 1").graph.size() == 1);
    const std::string path = "geogrow_test_graph.txt";
    {
      std::ofstream out(path);
      out << "p 4\ne 0 1\ne 0 2\ne 0 3\nr 1\n";
    }
    const auto spec = load_graph(path);
    std::remove(path.c_str());
    CHECK(spec.graph.size() == 3);
    CHECK(spec.root == 1);
    CHECK_THROWS_AS(load_graph("definitely-not-a-graph"), InputError);
  }
}
