#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "edgeideals/errors.hpp"
#include "edgeideals/families.hpp"
#include "edgeideals/graph.hpp"
#include "support.hpp"

using namespace edgeideals;

TEST_CASE("bipartition of even and odd cycles") {
  auto parts = cycle_graph(8).bipartition();
  REQUIRE(parts.has_value());
  CHECK(parts->side_one == (single(0) | single(2) | single(4) | single(6)));
  CHECK(parts->side_two == (single(1) | single(3) | single(5) | single(7)));

  CHECK(!cycle_graph(5).bipartition().has_value());

  auto edge = path_graph(2).bipartition();
  REQUIRE(edge.has_value());
  CHECK(edge->side_one == single(0));
  CHECK(edge->side_two == single(1));
}

TEST_CASE("bipartition crossing property and odd-walk re-verification") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testsupport::random_test_graph(rng, 8);
    auto parts = g.bipartition();
    if (parts) {
      CHECK((parts->side_one & parts->side_two) == 0);
      CHECK((parts->side_one | parts->side_two) == g.vertex_set());
      for (const auto& [u, v] : g.edges())
        CHECK(set_contains(parts->side_one, u) != set_contains(parts->side_one, v));
    } else {
      // Independent parity BFS must find an odd closed walk somewhere.
      bool odd_found = false;
      for (VertexSet comp : g.connected_components()) {
        std::vector<int> colour(static_cast<std::size_t>(g.capacity()), -1);
        std::vector<int> queue = {lowest_vertex(comp)};
        colour[static_cast<std::size_t>(queue[0])] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
          int u = queue[head];
          for (int v : set_to_vector(g.neighbors(u))) {
            if (colour[static_cast<std::size_t>(v)] < 0) {
              colour[static_cast<std::size_t>(v)] = 1 - colour[static_cast<std::size_t>(u)];
              queue.push_back(v);
            } else if (colour[static_cast<std::size_t>(v)] ==
                       colour[static_cast<std::size_t>(u)]) {
              odd_found = true;
            }
          }
        }
      }
      CHECK(odd_found);
    }
  }
}

TEST_CASE("neighbors") {
  Graph p3 = path_graph(3);
  CHECK(p3.neighbors(1) == (single(0) | single(2)));
  CHECK(Graph(1).neighbors(0) == 0);
  CHECK(cycle_graph(8).neighbors(0) == (single(1) | single(7)));
  CHECK_THROWS_AS(p3.neighbors(5), InputError);
  CHECK_THROWS_AS(p3.delete_vertices(single(0)).neighbors(0), InputError);
}

TEST_CASE("delete_vertices") {
  Graph p3 = path_graph(3);
  Graph mid_gone = p3.delete_vertices(single(1));
  CHECK(mid_gone.vertex_set() == (single(0) | single(2)));
  CHECK(mid_gone.edge_count() == 0);

  Graph end_gone = p3.delete_vertices(p3.closed_neighborhood(0));
  CHECK(end_gone.vertex_set() == single(2));

  CHECK(p3.delete_vertices(0) == p3);
  CHECK_THROWS_AS(p3.delete_vertices(single(4)), InputError);
}

TEST_CASE("closed_neighborhood_delete") {
  CHECK(star_graph(4).closed_neighborhood_delete(0).vertex_count() == 0);

  Graph p4 = path_graph(4);
  Graph rest = p4.closed_neighborhood_delete(0);
  CHECK(rest.vertex_set() == (single(2) | single(3)));
  CHECK(rest.has_edge(2, 3));

  Graph c8rest = cycle_graph(8).closed_neighborhood_delete(0);
  CHECK(c8rest.vertex_set() == (single(2) | single(3) | single(4) | single(5) | single(6)));
  CHECK(c8rest.edge_count() == 4);  // the path 2-3-4-5-6
}

TEST_CASE("degree_one_vertex") {
  CHECK(path_graph(3).degree_one_vertex() == 0);
  CHECK(!cycle_graph(4).degree_one_vertex().has_value());
  CHECK(path_graph(2).degree_one_vertex() == 0);
}

TEST_CASE("complement") {
  CHECK(path_graph(2).complement().edge_count() == 0);
  Graph triangle = Graph(3).complement();
  CHECK(triangle.edge_count() == 3);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = testsupport::random_test_graph(rng, 8);
    CHECK(g.complement().complement() == g);
    for (int v : g.complement().labels()) CHECK(!g.complement().has_edge(v, v));
  }
}

TEST_CASE("connected_components") {
  Graph two_edges = Graph::from_edges(4, {{0, 1}, {2, 3}});
  auto comps = two_edges.connected_components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == (single(0) | single(1)));
  CHECK(comps[1] == (single(2) | single(3)));

  CHECK(cycle_graph(8).connected_components().size() == 1);
  CHECK(Graph(3).connected_components().size() == 3);
}

TEST_CASE("family generators") {
  CHECK(AllBipartite(2, 2).size() == 16);
  CHECK(AllGraphs(3).size() == 8);

  Graph p4 = path_graph(4);
  CHECK(p4.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

  // Every generated graph keeps the simple-graph invariants.
  AllGraphs all4(4);
  for (std::uint64_t i = 0; i < all4.size(); ++i) {
    Graph g = all4.at(i);
    for (const auto& [u, v] : g.edges()) {
      CHECK(u < v);
      CHECK(set_contains(g.neighbors(v), u));
      CHECK(set_contains(g.neighbors(u), v));
    }
  }

  CHECK_THROWS_AS(path_graph(-1), InputError);
  CHECK_THROWS_AS(random_bipartite(2, 2, 1.5, 1), InputError);
  CHECK_THROWS_AS(Graph(kMaxVertices + 1), InputError);
}

TEST_CASE("deletion composition") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testsupport::random_test_graph(rng, 8);
    int x = set_to_vector(g.vertex_set())[0];
    VertexSet closed = g.closed_neighborhood(x);
    VertexSet rest = g.vertex_set() & ~closed;
    VertexSet t = 0;
    for (int v : set_to_vector(rest))
      if (rng() % 2) t |= single(v);
    CHECK(g.closed_neighborhood_delete(x).delete_vertices(t) == g.delete_vertices(closed | t));
  }
}

TEST_CASE("edge list round trip and exact format") {
  Graph p3 = path_graph(3);
  CHECK(write_edge_list(p3) == "n 3\ne 0 1\ne 1 2\n");
  std::istringstream in(write_edge_list(p3));
  CHECK(read_edge_list(in) == p3);

  std::istringstream commented("# a path\nn 3\n# middle comment\ne 0 1\ne 1 2\n");
  CHECK(read_edge_list(commented) == p3);
}

TEST_CASE("edge list parse errors carry line numbers") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
  };
  CHECK_THROWS_WITH_AS(parse("n 2\ne 1 0\n"), "edge list, line 2: edge endpoints must satisfy u < v",
                       InputError);
  CHECK_THROWS_AS(parse("e 0 1\n"), InputError);       // missing header
  CHECK_THROWS_AS(parse("n 2\ne 0 1\ne 0 1\n"), InputError);  // duplicate
  CHECK_THROWS_AS(parse("n 2\ne 0 2\n"), InputError);  // out of range
  CHECK_THROWS_AS(parse("n two\n"), InputError);
  CHECK_THROWS_AS(parse(""), InputError);
}

TEST_CASE("all trees via Pruefer sequences") {
  CHECK(AllTrees(3).size() == 3);
  CHECK(AllTrees(5).size() == 125);
  AllTrees trees(5);
  for (std::uint64_t i = 0; i < trees.size(); ++i) CHECK(trees.at(i).is_tree());

  // n=3: all three labeled trees are paths, one canonical form.
  std::set<std::string> keys;
  AllTrees t3(3);
  for (std::uint64_t i = 0; i < t3.size(); ++i) keys.insert(tree_iso_key(t3.at(i)));
  CHECK(keys.size() == 1);
}

TEST_CASE("canonical keys") {
  // Relabeling must not change the key.
  Graph p4 = path_graph(4);
  Graph p4b = Graph::from_edges(4, {{0, 2}, {2, 3}, {1, 3}});  // path 0-2-3-1
  CHECK(lex_min_adjacency_key(p4) == lex_min_adjacency_key(p4b));
  CHECK(tree_iso_key(p4) == tree_iso_key(p4b));

  Graph star4 = star_graph(4);
  CHECK(tree_iso_key(p4) != tree_iso_key(star4));
  CHECK(lex_min_adjacency_key(path_graph(3)) !=
        lex_min_adjacency_key(Graph(3).complement()));

  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = testsupport::random_test_graph(rng, 6);
    // Apply a random permutation and compare keys.
    int n = g.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(n);
    for (const auto& [u, v] : g.edges())
      h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    CHECK(lex_min_adjacency_key(g) == lex_min_adjacency_key(h));
  }
}

TEST_CASE("seeded generators are reproducible") {
  CHECK(random_graph(8, 0.5, 42, 3) == random_graph(8, 0.5, 42, 3));
  CHECK(random_bipartite(3, 3, 0.5, 9, 1) == random_bipartite(3, 3, 0.5, 9, 1));
  CHECK(random_tree(7, 5, 2) == random_tree(7, 5, 2));
  CHECK(random_tree(7, 5, 2).is_tree());
  // Different indices give independent draws (almost surely different).
  bool any_diff = false;
  for (int i = 0; i < 10; ++i)
    if (!(random_graph(8, 0.5, 42, i) == random_graph(8, 0.5, 42, i + 100))) any_diff = true;
  CHECK(any_diff);
}
