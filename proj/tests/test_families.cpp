#include <doctest.h>

#include <set>

#include "geogrow/errors.hpp"
#include "geogrow/families.hpp"
#include "geogrow/graph_io.hpp"
#include "geogrow/tree_shape.hpp"
#include "helpers.hpp"

using namespace geogrow;

TEST_SUITE("families") {
  TEST_CASE("tree counts agree with the dedup generator") {
    for (int n = 1; n <= 11; ++n) {
      const auto fast = enumerate_trees(n);
      const auto slow = oracle_ref::dedup_trees(n);
      CHECK(fast.size() == slow.size());
      std::set<std::string> a, b;
      for (const auto& t : fast) {
        CHECK(is_tree(t));
        CHECK(t.order() == n);
        a.insert(oracle_ref::tree_code(n, testutil::edges_of(t)));
      }
      for (const auto& e : slow) b.insert(oracle_ref::tree_code(n, e));
      CHECK(a == b);
    }
  }

  TEST_CASE("known counts beyond the oracle range") {
    CHECK(enumerate_trees(13).size() == 1301);
    CHECK(enumerate_trees(14).size() == 3159);
  }

  TEST_CASE("iterator bounds") {
    CHECK_THROWS_AS(TreeIterator(0), InputError);
    CHECK_THROWS_AS(TreeIterator(TreeIterator::kMaxOrder + 1), InputError);
    TreeIterator it(1);
    CHECK(it.next().has_value());
    CHECK_FALSE(it.next().has_value());
  }

  TEST_CASE("level sequences") {
    CHECK(tree_from_levels({0, 1, 2, 1}) == SimpleGraph::from_edges(4, {{0, 1}, {1, 2}, {0, 3}}));
    CHECK(tree_from_levels({0}).order() == 1);
  }

  TEST_CASE("limb census against subset enumeration") {
    const RootedTree cherry(SimpleGraph::from_edges(3, {{0, 1}, {0, 2}}), 0);
    for (int n = 3; n <= 10; ++n) {
      std::uint64_t expected = 0;
      const auto trees = oracle_ref::dedup_trees(n);
      for (const auto& e : trees) expected += oracle_ref::has_limb(n, e, 3, testutil::edges_of(cherry.graph()));
      const auto r = limb_census(n, cherry, "cherry");
      CHECK(r.count == expected);
      CHECK(r.total == trees.size());
      CHECK(r.limb == "cherry");
    }
  }

  TEST_CASE("census proportion is reduced") {
    const RootedTree leaf(SimpleGraph::from_edges(2, {{0, 1}}), 0);
    const auto r = limb_census(4, leaf);
    CHECK(r.count == 2);
    CHECK(r.total == 2);
    CHECK(r.proportion == "1");
    const auto multi = limb_census(9, {{"t1", builtin_tree("mckay-t1")}, {"leaf", leaf}});
    REQUIRE(multi.size() == 2);
    CHECK(multi[0].count == 0);
    CHECK(multi[1].count == multi[1].total);
  }
}
