#include "edgeideals/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "edgeideals/errors.hpp"

namespace edgeideals {

Graph::Graph(int n) {
  if (n < 0) throw InputError("graph: negative vertex count");
  if (n > kMaxVertices)
    throw InputError("graph: vertex count " + std::to_string(n) + " exceeds limit " +
                     std::to_string(kMaxVertices));
  capacity_ = n;
  vertices_ = full_set(n);
  adj_.assign(static_cast<std::size_t>(n), 0u);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (g.has_edge(u, v))
      throw InputError("graph: duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    g.add_edge(u, v);
  }
  return g;
}

void Graph::require_vertex(int v) const {
  if (!has_vertex(v)) throw InputError("graph: unknown vertex " + std::to_string(v));
}

void Graph::add_edge(int u, int v) {
  require_vertex(u);
  require_vertex(v);
  if (u == v) throw InputError("graph: loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u)] |= single(v);
  adj_[static_cast<std::size_t>(v)] |= single(u);
}

bool Graph::has_edge(int u, int v) const {
  return has_vertex(u) && has_vertex(v) && set_contains(adj_[static_cast<std::size_t>(u)], v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u : labels())
    for (VertexSet m = adj_[static_cast<std::size_t>(u)]; m != 0; m &= m - 1) {
      int v = lowest_vertex(m);
      if (u < v) out.emplace_back(u, v);
    }
  return out;
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet m = vertices_; m != 0; m &= m - 1)
    twice += set_size(adj_[static_cast<std::size_t>(lowest_vertex(m))]);
  return twice / 2;
}

VertexSet Graph::neighbors(int v) const {
  require_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

VertexSet Graph::closed_neighborhood(int v) const { return neighbors(v) | single(v); }

int Graph::degree(int v) const { return set_size(neighbors(v)); }

Graph Graph::delete_vertices(VertexSet s) const {
  if (!subset_of(s, vertices_)) throw InputError("graph: deleting vertices outside the graph");
  Graph g;
  g.capacity_ = capacity_;
  g.vertices_ = vertices_ & ~s;
  g.adj_.assign(adj_.size(), 0u);
  for (VertexSet m = g.vertices_; m != 0; m &= m - 1) {
    int v = lowest_vertex(m);
    g.adj_[static_cast<std::size_t>(v)] = adj_[static_cast<std::size_t>(v)] & g.vertices_;
  }
  return g;
}

Graph Graph::closed_neighborhood_delete(int v) const {
  return delete_vertices(closed_neighborhood(v));
}

Graph Graph::complement() const {
  Graph g;
  g.capacity_ = capacity_;
  g.vertices_ = vertices_;
  g.adj_.assign(adj_.size(), 0u);
  for (VertexSet m = vertices_; m != 0; m &= m - 1) {
    int v = lowest_vertex(m);
    g.adj_[static_cast<std::size_t>(v)] =
        vertices_ & ~adj_[static_cast<std::size_t>(v)] & ~single(v);
  }
  return g;
}

std::optional<int> Graph::degree_one_vertex() const {
  for (VertexSet m = vertices_; m != 0; m &= m - 1) {
    int v = lowest_vertex(m);
    if (set_size(adj_[static_cast<std::size_t>(v)]) == 1) return v;
  }
  return std::nullopt;
}

std::vector<VertexSet> Graph::connected_components() const {
  std::vector<VertexSet> out;
  VertexSet seen = 0;
  for (VertexSet m = vertices_; m != 0; m &= m - 1) {
    int start = lowest_vertex(m);
    if (set_contains(seen, start)) continue;
    VertexSet comp = single(start);
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f != 0; f &= f - 1)
        next |= adj_[static_cast<std::size_t>(lowest_vertex(f))];
      frontier = next & ~comp;
      comp |= frontier;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

std::optional<Bipartition> Graph::bipartition() const {
  Bipartition parts;
  for (VertexSet comp : connected_components()) {
    int root = lowest_vertex(comp);
    VertexSet even = single(root);
    VertexSet odd = 0;
    VertexSet frontier = even;
    bool parity = false;  // parity of the frontier just assigned
    while (frontier != 0) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f != 0; f &= f - 1)
        next |= adj_[static_cast<std::size_t>(lowest_vertex(f))];
      next &= ~(even | odd);
      parity = !parity;
      (parity ? odd : even) |= next;
      frontier = next;
    }
    // Every edge inside the component must cross the two colour classes.
    for (VertexSet m = comp; m != 0; m &= m - 1) {
      int v = lowest_vertex(m);
      VertexSet side = set_contains(even, v) ? even : odd;
      if ((adj_[static_cast<std::size_t>(v)] & side) != 0) return std::nullopt;
    }
    parts.side_one |= even;
    parts.side_two |= odd;
  }
  return parts;
}

bool Graph::is_tree() const {
  if (vertex_count() == 0) return false;
  return connected_components().size() == 1 && edge_count() == vertex_count() - 1;
}

Graph Graph::compacted() const {
  std::vector<int> old_labels = labels();
  std::vector<int> to_new(static_cast<std::size_t>(capacity_), -1);
  for (std::size_t i = 0; i < old_labels.size(); ++i)
    to_new[static_cast<std::size_t>(old_labels[i])] = static_cast<int>(i);
  Graph g(static_cast<int>(old_labels.size()));
  for (const auto& [u, v] : edges())
    g.add_edge(to_new[static_cast<std::size_t>(u)], to_new[static_cast<std::size_t>(v)]);
  return g;
}

namespace {

bool parse_int(const std::string& tok, int& out) {
  if (tok.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == tok.size();
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_header = false;
  Graph g;
  auto fail = [&](const std::string& msg) {
    throw InputError("edge list, line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string kind;
    ss >> kind;
    if (!have_header) {
      if (kind != "n") fail("expected header 'n <vertex_count>'");
      std::string tok;
      int n = 0;
      if (!(ss >> tok) || !parse_int(tok, n)) fail("bad vertex count");
      if (ss >> tok) fail("trailing tokens after vertex count");
      if (n < 0) fail("negative vertex count");
      if (n > kMaxVertices) fail("vertex count exceeds limit " + std::to_string(kMaxVertices));
      g = Graph(n);
      have_header = true;
      continue;
    }
    if (kind != "e") fail("expected edge line 'e <u> <v>'");
    std::string ta, tb, extra;
    int u = 0, v = 0;
    if (!(ss >> ta >> tb) || !parse_int(ta, u) || !parse_int(tb, v)) fail("bad edge endpoints");
    if (ss >> extra) fail("trailing tokens after edge");
    if (u < 0 || v < 0 || u >= g.capacity() || v >= g.capacity()) fail("endpoint out of range");
    if (u >= v) fail("edge endpoints must satisfy u < v");
    if (g.has_edge(u, v)) fail("duplicate edge");
    g.add_edge(u, v);
  }
  if (!have_header) throw InputError("edge list: missing 'n <vertex_count>' header");
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
  Graph dense = (g.vertex_count() == g.capacity()) ? g : g.compacted();
  std::string out = "n " + std::to_string(dense.vertex_count()) + "\n";
  for (const auto& [u, v] : dense.edges())
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace edgeideals
