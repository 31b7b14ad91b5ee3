#pragma once

#include <cstdint>
#include <string>

#include "edgeideals/graph.hpp"

namespace edgeideals {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);  // K_{1,n-1} on n vertices, center 0
Graph complete_bipartite(int a, int b);

// Exhaustive labeled families with random access by index. Index order is
// fixed, so campaigns can partition the index space across workers and still
// produce deterministic reports.

// All 2^(a*b) bipartite graphs on fixed parts {0..a-1} and {a..a+b-1};
// bit i*b+j of the index switches the edge (i, a+j).
class AllBipartite {
 public:
  AllBipartite(int a, int b);
  std::uint64_t size() const { return std::uint64_t{1} << (a_ * b_); }
  Graph at(std::uint64_t index) const;
  int part_a() const { return a_; }
  int part_b() const { return b_; }

 private:
  int a_, b_;
};

// All 2^(n*(n-1)/2) labeled graphs on n vertices; index bits follow the
// lexicographic order of vertex pairs (0,1),(0,2),...,(n-2,n-1).
class AllGraphs {
 public:
  explicit AllGraphs(int n);
  std::uint64_t size() const { return std::uint64_t{1} << pairs_; }
  Graph at(std::uint64_t index) const;
  int vertex_count() const { return n_; }

 private:
  int n_, pairs_;
};

// All n^(n-2) labeled trees on n vertices, indexed by Pruefer sequence.
class AllTrees {
 public:
  explicit AllTrees(int n);
  std::uint64_t size() const;
  Graph at(std::uint64_t index) const;

 private:
  int n_;
};

// Seeded random draws; index selects an independent reproducible draw so a
// stream can be consumed in any order.
Graph random_bipartite(int a, int b, double p, std::uint64_t seed, std::uint64_t index = 0);
Graph random_tree(int n, std::uint64_t seed, std::uint64_t index = 0);
Graph random_graph(int n, double p, std::uint64_t seed, std::uint64_t index = 0);

// One tree per isomorphism class on n vertices, found by walking every
// Pruefer sequence and keeping the first tree with each canonical key,
// paired with its Pruefer index. Isomorphism-invariant checks on the
// representatives cover the whole labeled family.
std::vector<std::pair<Graph, std::uint64_t>> tree_representatives(int n);

// Lexicographically minimal adjacency matrix over all vertex relabelings.
// Brute force over permutations; intended for n <= 8.
std::string lex_min_adjacency_key(const Graph& g);

// Canonical form for trees (centre-rooted AHU encoding); linear time, any n.
std::string tree_iso_key(const Graph& g);

}  // namespace edgeideals
