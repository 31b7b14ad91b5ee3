#include "edgeideals/invariants.hpp"

#include <algorithm>
#include <unordered_map>

#include "edgeideals/errors.hpp"

namespace edgeideals {

bool is_three_disjoint(const Graph& g, std::pair<int, int> e1, std::pair<int, int> e2) {
  if (!g.has_edge(e1.first, e1.second))
    throw InputError("is_three_disjoint: first argument is not an edge");
  if (!g.has_edge(e2.first, e2.second))
    throw InputError("is_three_disjoint: second argument is not an edge");

  VertexSet ends1 = single(e1.first) | single(e1.second);
  VertexSet ends2 = single(e2.first) | single(e2.second);
  VertexSet ends = ends1 | ends2;

  bool direct = false;
  if (set_size(ends) == 4) {
    // Induced subgraph on the four endpoints must have exactly these edges.
    int induced_edges = 0;
    for (const auto& [u, v] : g.edges())
      if (set_contains(ends, u) && set_contains(ends, v)) ++induced_edges;
    direct = (induced_edges == 2);
  }

  // Complement characterization: the endpoints induce a four-cycle there.
  bool via_complement = false;
  if (set_size(ends) == 4) {
    Graph comp = g.complement();
    int induced_edges = 0;
    bool degrees_ok = true;
    for (int v : set_to_vector(ends)) {
      int deg = set_size(comp.neighbors(v) & ends);
      if (deg != 2) degrees_ok = false;
      induced_edges += deg;
    }
    induced_edges /= 2;
    // A 2-regular simple graph on four vertices is a four-cycle.
    via_complement = degrees_ok && induced_edges == 4;
  }
  if (direct != via_complement)
    throw std::logic_error("is_three_disjoint: characterizations disagree");
  return direct;
}

namespace {

// Edges u-v and w-z, all endpoints distinct, form an induced pair iff no
// other edge of g joins their endpoints.
bool pair_compatible(const Graph& g, std::pair<int, int> a, std::pair<int, int> b) {
  VertexSet ends = single(a.first) | single(a.second) | single(b.first) | single(b.second);
  if (set_size(ends) != 4) return false;
  int induced = 0;
  for (int u : set_to_vector(ends))
    induced += set_size(g.neighbors(u) & ends);
  return induced / 2 == 2;
}

void induced_matching_search(const Graph& g, const std::vector<std::pair<int, int>>& edges,
                             std::size_t next, std::vector<std::size_t>& chosen,
                             std::vector<std::size_t>& best) {
  if (chosen.size() > best.size()) best = chosen;
  // Bound: even taking every remaining edge cannot beat the best.
  if (chosen.size() + (edges.size() - next) <= best.size()) return;
  for (std::size_t i = next; i < edges.size(); ++i) {
    bool ok = true;
    for (std::size_t j : chosen)
      if (!pair_compatible(g, edges[j], edges[i])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(i);
    induced_matching_search(g, edges, i + 1, chosen, best);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<std::pair<int, int>> a_invariant_witness(const Graph& g) {
  std::vector<std::pair<int, int>> edges = g.edges();  // lexicographic
  std::vector<std::size_t> chosen, best;
  induced_matching_search(g, edges, 0, chosen, best);
  std::vector<std::pair<int, int>> out;
  for (std::size_t i : best) out.push_back(edges[i]);
  return out;
}

int a_invariant(const Graph& g) {
  std::vector<std::pair<int, int>> witness = a_invariant_witness(g);
  // The pairwise predicate re-checks the witness; the two formulations of
  // 3-disjointness guard each other.
  for (std::size_t i = 0; i < witness.size(); ++i)
    for (std::size_t j = i + 1; j < witness.size(); ++j)
      if (!is_three_disjoint(g, witness[i], witness[j]))
        throw std::logic_error("a_invariant: witness fails the pairwise predicate");
  return static_cast<int>(witness.size());
}

namespace {

int matching_rec(const Graph& g, VertexSet alive, std::unordered_map<VertexSet, int>& memo) {
  if (alive == 0) return 0;
  auto it = memo.find(alive);
  if (it != memo.end()) return it->second;
  int v = lowest_vertex(alive);
  // Either v stays unmatched, or it matches one of its live neighbours.
  int best = matching_rec(g, alive & ~single(v), memo);
  for (VertexSet m = g.neighbors(v) & alive; m != 0; m &= m - 1) {
    int u = lowest_vertex(m);
    best = std::max(best, 1 + matching_rec(g, alive & ~single(v) & ~single(u), memo));
  }
  memo.emplace(alive, best);
  return best;
}

}  // namespace

int matching_number(const Graph& g) {
  std::unordered_map<VertexSet, int> memo;
  return matching_rec(g, g.vertex_set(), memo);
}

}  // namespace edgeideals
