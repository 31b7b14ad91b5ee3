#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgeideals/vertex_set.hpp"

namespace edgeideals {

struct Bipartition {
  VertexSet side_one = 0;
  VertexSet side_two = 0;
};

/// Finite simple graph on dense integer labels. Deleting vertices keeps the
/// surviving labels, so complexes, ideals and certificates derived from a
/// subgraph always refer to vertices of the original graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);  // edgeless graph on labels 0..n-1

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  // Ambient label bound: every vertex label is < capacity().
  int capacity() const { return capacity_; }
  VertexSet vertex_set() const { return vertices_; }
  int vertex_count() const { return set_size(vertices_); }
  std::vector<int> labels() const { return set_to_vector(vertices_); }
  bool has_vertex(int v) const { return set_contains(vertices_, v); }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;  // sorted pairs, u < v
  int edge_count() const;

  VertexSet neighbors(int v) const;  // open neighborhood
  VertexSet closed_neighborhood(int v) const;
  int degree(int v) const;

  Graph delete_vertices(VertexSet s) const;
  Graph closed_neighborhood_delete(int v) const;
  Graph complement() const;

  // Lowest-labeled vertex of degree exactly one, if any.
  std::optional<int> degree_one_vertex() const;

  // Maximal connected vertex sets, ordered by lowest label.
  std::vector<VertexSet> connected_components() const;

  // Deterministic two-coloring: the lowest-labeled vertex of each connected
  // component lands in side_one. Absent iff some cycle is odd.
  std::optional<Bipartition> bipartition() const;
  bool is_bipartite() const { return bipartition().has_value(); }

  bool is_tree() const;

  // Relabels the surviving vertices to 0..k-1, preserving order.
  Graph compacted() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void require_vertex(int v) const;

  int capacity_ = 0;
  VertexSet vertices_ = 0;
  std::vector<VertexSet> adj_;
};

// Edge-list text format: `n <vertex_count>` then `e <u> <v>` with
// 0 <= u < v < n, one edge per line; lines starting with `#` are ignored;
// duplicate edges are rejected. ASCII, LF newlines, single spaces.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
std::string write_edge_list(const Graph& g);  // requires dense labels

}  // namespace edgeideals
