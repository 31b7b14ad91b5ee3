// Test-only oracles: independent brute-force implementations used to freeze
// expected values. Everything here enumerates subsets or permutations
// directly from the definitions and stays independent of the library's
// search and elimination paths.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "edgeideals/graph.hpp"
#include "edgeideals/simplicial_complex.hpp"

namespace testsupport {

using edgeideals::Graph;
using edgeideals::SimplicialComplex;
using edgeideals::VertexSet;

inline bool is_independent(const Graph& g, VertexSet s) {
  for (const auto& [u, v] : g.edges())
    if (edgeideals::set_contains(s, u) && edgeideals::set_contains(s, v)) return false;
  return true;
}

inline std::vector<VertexSet> brute_maximal_independent_sets(const Graph& g) {
  std::vector<int> labels = g.labels();
  const int n = static_cast<int>(labels.size());
  std::vector<VertexSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    VertexSet s = 0;
    for (int i = 0; i < n; ++i)
      if ((bits >> i) & 1u) s |= edgeideals::single(labels[static_cast<std::size_t>(i)]);
    if (!is_independent(g, s)) continue;
    bool maximal = true;
    for (int v : labels)
      if (!edgeideals::set_contains(s, v) && is_independent(g, s | edgeideals::single(v)))
        maximal = false;
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_cover(const Graph& g, VertexSet s) {
  for (const auto& [u, v] : g.edges())
    if (!edgeideals::set_contains(s, u) && !edgeideals::set_contains(s, v)) return false;
  return true;
}

inline std::vector<VertexSet> brute_minimal_covers(const Graph& g) {
  std::vector<int> labels = g.labels();
  const int n = static_cast<int>(labels.size());
  std::vector<VertexSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    VertexSet s = 0;
    for (int i = 0; i < n; ++i)
      if ((bits >> i) & 1u) s |= edgeideals::single(labels[static_cast<std::size_t>(i)]);
    if (!is_cover(g, s)) continue;
    bool minimal = true;
    for (int v : labels)
      if (edgeideals::set_contains(s, v) && is_cover(g, s & ~edgeideals::single(v)))
        minimal = false;
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Minimal hitting sets of `sets` inside `ground`, by scanning every subset.
inline std::vector<VertexSet> brute_minimal_hitting_sets(VertexSet ground,
                                                         const std::vector<VertexSet>& sets) {
  std::vector<int> labels = edgeideals::set_to_vector(ground);
  const int n = static_cast<int>(labels.size());
  auto hits_all = [&](VertexSet s) {
    for (VertexSet t : sets)
      if ((s & t) == 0) return false;
    return true;
  };
  std::vector<VertexSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    VertexSet s = 0;
    for (int i = 0; i < n; ++i)
      if ((bits >> i) & 1u) s |= edgeideals::single(labels[static_cast<std::size_t>(i)]);
    if (!hits_all(s)) continue;
    bool minimal = true;
    for (int v : edgeideals::set_to_vector(s))
      if (hits_all(s & ~edgeideals::single(v))) minimal = false;
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline long long brute_independent_set_count(const Graph& g) {
  std::vector<int> labels = g.labels();
  const int n = static_cast<int>(labels.size());
  long long count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    VertexSet s = 0;
    for (int i = 0; i < n; ++i)
      if ((bits >> i) & 1u) s |= edgeideals::single(labels[static_cast<std::size_t>(i)]);
    if (is_independent(g, s)) ++count;
  }
  return count;
}

// Edges whose four endpoints induce exactly the two of them, straight from
// the induced-subgraph definition.
inline bool brute_pair_three_disjoint(const Graph& g, std::pair<int, int> a,
                                      std::pair<int, int> b) {
  VertexSet ends = edgeideals::single(a.first) | edgeideals::single(a.second) |
                   edgeideals::single(b.first) | edgeideals::single(b.second);
  if (edgeideals::set_size(ends) != 4) return false;
  int induced = 0;
  for (const auto& [u, v] : g.edges())
    if (edgeideals::set_contains(ends, u) && edgeideals::set_contains(ends, v)) ++induced;
  return induced == 2;
}

inline int brute_a_invariant(const Graph& g) {
  std::vector<std::pair<int, int>> edges = g.edges();
  const int m = static_cast<int>(edges.size());
  int best = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    std::vector<std::pair<int, int>> chosen;
    for (int i = 0; i < m; ++i)
      if ((bits >> i) & 1u) chosen.push_back(edges[static_cast<std::size_t>(i)]);
    bool ok = true;
    for (std::size_t i = 0; i < chosen.size() && ok; ++i)
      for (std::size_t j = i + 1; j < chosen.size() && ok; ++j)
        if (!brute_pair_three_disjoint(g, chosen[i], chosen[j])) ok = false;
    if (ok) best = std::max(best, static_cast<int>(chosen.size()));
  }
  return best;
}

inline int brute_matching_number(const Graph& g) {
  std::vector<std::pair<int, int>> edges = g.edges();
  const int m = static_cast<int>(edges.size());
  int best = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    VertexSet used = 0;
    bool ok = true;
    int count = 0;
    for (int i = 0; i < m; ++i) {
      if (!((bits >> i) & 1u)) continue;
      VertexSet ends = edgeideals::single(edges[static_cast<std::size_t>(i)].first) |
                       edgeideals::single(edges[static_cast<std::size_t>(i)].second);
      if ((used & ends) != 0) {
        ok = false;
        break;
      }
      used |= ends;
      ++count;
    }
    if (ok) best = std::max(best, count);
  }
  return best;
}

// Vertex decomposability by plain recursion on the definition: no
// memoization, no candidate restriction beyond the ground set.
inline bool naive_vertex_decomposable(const SimplicialComplex& c) {
  if (c.is_void() || c.is_simplex()) return true;
  for (int x : edgeideals::set_to_vector(c.support())) {
    SimplicialComplex del = c.deletion(edgeideals::single(x));
    bool facets_ok = true;
    for (VertexSet f : del.facets())
      if (!std::binary_search(c.facets().begin(), c.facets().end(), f)) facets_ok = false;
    if (!facets_ok) continue;
    if (naive_vertex_decomposable(del) &&
        naive_vertex_decomposable(c.link(edgeideals::single(x))))
      return true;
  }
  return false;
}

// Shellability by scanning every permutation of the facets; only for tiny
// complexes.
inline bool naive_shellable(const SimplicialComplex& c) {
  std::vector<VertexSet> facets = c.facets();
  const int s = static_cast<int>(facets.size());
  if (s <= 1) return true;
  std::vector<int> perm(static_cast<std::size_t>(s));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool valid = true;
    for (int j = 1; j < s && valid; ++j)
      for (int i = 0; i < j && valid; ++i) {
        bool ok = false;
        for (int l = 0; l < j && !ok; ++l) {
          VertexSet d = facets[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] &
                        ~facets[static_cast<std::size_t>(perm[static_cast<std::size_t>(l)])];
          VertexSet di = facets[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] &
                         ~facets[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
          if (edgeideals::set_size(d) == 1 && edgeideals::subset_of(d, di)) ok = true;
        }
        if (!ok) valid = false;
      }
    if (valid) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline Graph random_test_graph(std::mt19937& rng, int max_n) {
  std::uniform_int_distribution<int> size(1, max_n);
  int n = size(rng);
  Graph g(n);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline SimplicialComplex random_test_complex(std::mt19937& rng, int max_ground) {
  std::uniform_int_distribution<int> size(0, max_ground);
  int n = size(rng);
  VertexSet ground = edgeideals::full_set(n);
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_int_distribution<VertexSet> face(0, ground);
  std::vector<VertexSet> faces;
  int k = count(rng);
  for (int i = 0; i < k; ++i) faces.push_back(n == 0 ? 0 : (face(rng) & ground));
  return SimplicialComplex::generated_by(ground, faces);
}

}  // namespace testsupport
