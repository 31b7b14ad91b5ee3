#include "edgeideals/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "edgeideals/errors.hpp"

namespace edgeideals {

namespace {

void require_size(int n, const char* what) {
  if (n < 0) throw InputError(std::string(what) + ": negative size");
  if (n > kMaxVertices) throw InputError(std::string(what) + ": size exceeds limit");
}

// splitmix64; used to derive independent RNG states from (seed, index).
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() { return mix64(state += 0x9e3779b97f4a7c15ull); }
  // Uniform in [0,1) with 53 random bits; bit-exact across platforms.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t k) { return next() % k; }
};

SplitMix draw_rng(std::uint64_t seed, std::uint64_t index) {
  return SplitMix{mix64(seed) ^ mix64(index + 0x51ed2701ull)};
}

Graph pruefer_decode(int n, const std::vector<int>& seq) {
  if (n == 1) return Graph(1);
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int s : seq) deg[static_cast<std::size_t>(s)] += 1;
  Graph g(n);
  VertexSet leaves = 0;
  for (int v = 0; v < n; ++v)
    if (deg[static_cast<std::size_t>(v)] == 1) leaves |= single(v);
  for (int s : seq) {
    int leaf = lowest_vertex(leaves);
    leaves &= ~single(leaf);
    g.add_edge(leaf, s);
    if (--deg[static_cast<std::size_t>(s)] == 1) leaves |= single(s);
  }
  int u = lowest_vertex(leaves);
  leaves &= ~single(u);
  g.add_edge(u, lowest_vertex(leaves));
  return g;
}

}  // namespace

Graph path_graph(int n) {
  require_size(n, "path");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  require_size(n, "cycle");
  if (n > 0 && n < 3) throw InputError("cycle: needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  if (n >= 3) g.add_edge(0, n - 1);
  return g;
}

Graph star_graph(int n) {
  require_size(n, "star");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  require_size(a, "complete_bipartite");
  require_size(b, "complete_bipartite");
  require_size(a + b, "complete_bipartite");
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

AllBipartite::AllBipartite(int a, int b) : a_(a), b_(b) {
  require_size(a, "all_bipartite");
  require_size(b, "all_bipartite");
  require_size(a + b, "all_bipartite");
  if (a * b > 62) throw InputError("all_bipartite: too many edge slots to enumerate");
}

Graph AllBipartite::at(std::uint64_t index) const {
  if (index >= size()) throw InputError("all_bipartite: index out of range");
  Graph g(a_ + b_);
  for (int i = 0; i < a_; ++i)
    for (int j = 0; j < b_; ++j)
      if ((index >> (i * b_ + j)) & 1u) g.add_edge(i, a_ + j);
  return g;
}

AllGraphs::AllGraphs(int n) : n_(n), pairs_(n * (n - 1) / 2) {
  require_size(n, "all_graphs");
  if (pairs_ > 62) throw InputError("all_graphs: too many edge slots to enumerate");
}

Graph AllGraphs::at(std::uint64_t index) const {
  if (index >= size()) throw InputError("all_graphs: index out of range");
  Graph g(n_);
  int bit = 0;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v, ++bit)
      if ((index >> bit) & 1u) g.add_edge(u, v);
  return g;
}

AllTrees::AllTrees(int n) : n_(n) {
  require_size(n, "all_trees");
  if (n == 0) throw InputError("all_trees: needs at least 1 vertex");
}

std::uint64_t AllTrees::size() const {
  if (n_ <= 2) return 1;
  std::uint64_t total = 1;
  for (int i = 0; i < n_ - 2; ++i) total *= static_cast<std::uint64_t>(n_);
  return total;
}

Graph AllTrees::at(std::uint64_t index) const {
  if (index >= size()) throw InputError("all_trees: index out of range");
  if (n_ == 1) return Graph(1);
  if (n_ == 2) return path_graph(2);
  std::vector<int> seq(static_cast<std::size_t>(n_ - 2));
  for (auto& s : seq) {
    s = static_cast<int>(index % static_cast<std::uint64_t>(n_));
    index /= static_cast<std::uint64_t>(n_);
  }
  return pruefer_decode(n_, seq);
}

Graph random_bipartite(int a, int b, double p, std::uint64_t seed, std::uint64_t index) {
  require_size(a, "random_bipartite");
  require_size(b, "random_bipartite");
  require_size(a + b, "random_bipartite");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("random_bipartite: p must be in [0,1]");
  SplitMix rng = draw_rng(seed, index);
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      if (rng.next_double() < p) g.add_edge(i, a + j);
  return g;
}

Graph random_graph(int n, double p, std::uint64_t seed, std::uint64_t index) {
  require_size(n, "random_graph");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("random_graph: p must be in [0,1]");
  SplitMix rng = draw_rng(seed, index ^ 0xa5a5a5a5ull);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_double() < p) g.add_edge(u, v);
  return g;
}

Graph random_tree(int n, std::uint64_t seed, std::uint64_t index) {
  require_size(n, "random_tree");
  if (n == 0) throw InputError("random_tree: needs at least 1 vertex");
  if (n <= 2) return n == 1 ? Graph(1) : path_graph(2);
  SplitMix rng = draw_rng(seed, index ^ 0x7e3e0ull);
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  for (auto& s : seq) s = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  return pruefer_decode(n, seq);
}

std::vector<std::pair<Graph, std::uint64_t>> tree_representatives(int n) {
  AllTrees family(n);
  std::unordered_map<std::string, std::pair<Graph, std::uint64_t>> reps;
  for (std::uint64_t i = 0; i < family.size(); ++i) {
    Graph t = family.at(i);
    reps.emplace(tree_iso_key(t), std::pair{t, i});
  }
  std::vector<std::pair<Graph, std::uint64_t>> out;
  out.reserve(reps.size());
  for (auto& [key, value] : reps) out.push_back(value);
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.second < y.second; });
  return out;
}

std::string lex_min_adjacency_key(const Graph& g) {
  Graph dense = g.compacted();
  int n = dense.vertex_count();
  if (n > 8) throw InputError("lex_min_adjacency_key: brute force limited to 8 vertices");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string key;
    key.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        key += dense.has_edge(perm[static_cast<std::size_t>(u)],
                              perm[static_cast<std::size_t>(v)])
                   ? '1'
                   : '0';
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

std::string tree_iso_key(const Graph& g) {
  if (!g.is_tree()) throw InputError("tree_iso_key: graph is not a tree");
  Graph t = g.compacted();
  int n = t.vertex_count();
  if (n == 1) return "()";

  // Peel leaves to find the centre vertex or centre edge.
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = t.degree(v);
  VertexSet alive = full_set(n);
  while (set_size(alive) > 2) {
    VertexSet leaves = 0;
    for (VertexSet m = alive; m != 0; m &= m - 1) {
      int v = lowest_vertex(m);
      if (deg[static_cast<std::size_t>(v)] == 1) leaves |= single(v);
    }
    for (VertexSet m = leaves; m != 0; m &= m - 1) {
      int v = lowest_vertex(m);
      for (VertexSet a = t.neighbors(v) & alive; a != 0; a &= a - 1)
        deg[static_cast<std::size_t>(lowest_vertex(a))] -= 1;
    }
    alive &= ~leaves;
  }

  std::function<std::string(int, int)> encode = [&](int v, int parent) {
    std::vector<std::string> parts;
    for (VertexSet m = t.neighbors(v); m != 0; m &= m - 1) {
      int w = lowest_vertex(m);
      if (w != parent) parts.push_back(encode(w, v));
    }
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    return out + ")";
  };

  std::vector<int> centres = set_to_vector(alive);
  if (centres.size() == 1) return encode(centres[0], -1);
  std::string a = encode(centres[0], centres[1]);
  std::string b = encode(centres[1], centres[0]);
  if (b < a) std::swap(a, b);
  return "(" + a + b + ")";
}

}  // namespace edgeideals
