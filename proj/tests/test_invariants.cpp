#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "edgeideals/errors.hpp"
#include "edgeideals/families.hpp"
#include "edgeideals/invariants.hpp"
#include "support.hpp"

using namespace edgeideals;

TEST_CASE("three-disjoint edges") {
  Graph c8 = cycle_graph(8);
  CHECK(is_three_disjoint(c8, {0, 1}, {4, 5}));
  CHECK(!is_three_disjoint(c8, {0, 1}, {2, 3}));  // edge 1-2 joins them

  Graph p4 = path_graph(4);
  CHECK(!is_three_disjoint(p4, {0, 1}, {2, 3}));  // edge 1-2 present

  CHECK(!is_three_disjoint(c8, {0, 1}, {1, 2}));  // shared endpoint
  CHECK(!is_three_disjoint(c8, {0, 1}, {0, 1}));

  CHECK_THROWS_AS(is_three_disjoint(c8, {0, 2}, {4, 5}), InputError);
  CHECK_THROWS_AS(is_three_disjoint(c8, {0, 1}, {4, 6}), InputError);
}

TEST_CASE("three-disjoint matches the brute predicate on random graphs") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testsupport::random_test_graph(rng, 7);
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i; j < edges.size(); ++j)
        CHECK(is_three_disjoint(g, edges[i], edges[j]) ==
              testsupport::brute_pair_three_disjoint(g, edges[i], edges[j]));
  }
}

TEST_CASE("a invariant") {
  CHECK(a_invariant(cycle_graph(8)) == 2);
  CHECK(a_invariant(path_graph(2)) == 1);
  CHECK(a_invariant(path_graph(4)) == 1);
  CHECK(a_invariant(Graph(4)) == 0);

  auto witness = a_invariant_witness(cycle_graph(8));
  REQUIRE(witness.size() == 2);
  CHECK(is_three_disjoint(cycle_graph(8), witness[0], witness[1]));
}

TEST_CASE("a invariant matches brute force, exhaustively to five vertices") {
  for (int n = 1; n <= 5; ++n) {
    AllGraphs family(n);
    for (std::uint64_t i = 0; i < family.size(); ++i) {
      Graph g = family.at(i);
      CHECK(a_invariant(g) == testsupport::brute_a_invariant(g));
    }
  }
  std::mt19937 rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testsupport::random_test_graph(rng, 7);
    if (g.edge_count() > 14) continue;  // keep the 2^m oracle quick
    CHECK(a_invariant(g) == testsupport::brute_a_invariant(g));
  }
}

TEST_CASE("matching number") {
  CHECK(matching_number(cycle_graph(8)) == 4);
  CHECK(matching_number(path_graph(2)) == 1);
  CHECK(matching_number(path_graph(4)) == 2);
  CHECK(matching_number(Graph(5)) == 0);
}

TEST_CASE("matching number matches brute force") {
  for (int n = 1; n <= 5; ++n) {
    AllGraphs family(n);
    for (std::uint64_t i = 0; i < family.size(); ++i) {
      Graph g = family.at(i);
      CHECK(matching_number(g) == testsupport::brute_matching_number(g));
    }
  }
  std::mt19937 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = testsupport::random_test_graph(rng, 7);
    if (g.edge_count() > 14) continue;
    CHECK(matching_number(g) == testsupport::brute_matching_number(g));
  }
}

TEST_CASE("an induced matching is a matching") {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = testsupport::random_test_graph(rng, 8);
    CHECK(a_invariant(g) <= matching_number(g));
  }
}
