#include "edgeideals/decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "edgeideals/errors.hpp"
#include "edgeideals/graph.hpp"

namespace edgeideals {

DecompositionTree DecompositionTree::simplex_leaf() {
  DecompositionTree t;
  t.kind = Kind::SimplexLeaf;
  return t;
}

DecompositionTree DecompositionTree::void_leaf() {
  DecompositionTree t;
  t.kind = Kind::VoidLeaf;
  return t;
}

DecompositionTree DecompositionTree::shed(int vertex, DecompositionTree del,
                                          DecompositionTree link) {
  DecompositionTree t;
  t.kind = Kind::Shed;
  t.vertex = vertex;
  t.del = std::make_unique<DecompositionTree>(std::move(del));
  t.link = std::make_unique<DecompositionTree>(std::move(link));
  return t;
}

DecompositionTree DecompositionTree::clone() const {
  DecompositionTree t;
  t.kind = kind;
  t.vertex = vertex;
  if (del) t.del = std::make_unique<DecompositionTree>(del->clone());
  if (link) t.link = std::make_unique<DecompositionTree>(link->clone());
  return t;
}

bool DecompositionTree::equals(const DecompositionTree& other) const {
  if (kind != other.kind) return false;
  if (kind != Kind::Shed) return true;
  if (vertex != other.vertex) return false;
  return del->equals(*other.del) && link->equals(*other.link);
}

namespace detail {

// Decomposition tree in support-relative coordinates: a SHED node stores the
// index of the shedding vertex within the sorted support of its complex.
// Complexes that agree after compacting to their support share these nodes
// through the cache; translating back just walks the actual complex.
struct CompactVdNode {
  DecompositionTree::Kind kind;
  int support_index = -1;
  std::shared_ptr<const CompactVdNode> del;
  std::shared_ptr<const CompactVdNode> link;
};

}  // namespace detail

namespace {

using detail::CompactVdNode;
using CompactPtr = std::shared_ptr<const CompactVdNode>;

CompactPtr make_leaf(DecompositionTree::Kind kind) {
  auto node = std::make_shared<CompactVdNode>();
  node->kind = kind;
  return node;
}

// Facets of the deletion of x, and whether each of them is a facet of the
// parent complex (the shedding condition).
bool shedding_condition_holds(const std::vector<VertexSet>& facets, int x) {
  // Deletion facets are the facets avoiding x plus the maximal sets T \ {x}
  // for facets T containing x. The former are always facets of the parent;
  // the latter never are (antichain), so the condition holds exactly when no
  // T \ {x} survives as a deletion facet.
  for (VertexSet t : facets) {
    if (!set_contains(t, x)) continue;
    VertexSet reduced = t & ~single(x);
    bool covered = false;
    for (VertexSet other : facets) {
      if (other == t || set_contains(other, x)) continue;
      if (subset_of(reduced, other)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

// The search works on (possibly null) caches; a null pointer disables
// memoization entirely.
CompactPtr search_vd(const SimplicialComplex& complex, DecompositionCaches* caches) {
  if (complex.is_void()) return make_leaf(DecompositionTree::Kind::VoidLeaf);
  if (complex.is_simplex()) return make_leaf(DecompositionTree::Kind::SimplexLeaf);

  std::string key;
  if (caches != nullptr) {
    key = compact_facet_key(complex);
    if (auto hit = caches->vd.find(key)) return *hit;
  }

  CompactPtr result;  // null = not vertex decomposable
  std::vector<int> support = set_to_vector(complex.support());
  for (std::size_t idx = 0; idx < support.size() && !result; ++idx) {
    int x = support[idx];
    if (!shedding_condition_holds(complex.facets(), x)) continue;
    CompactPtr del_tree = search_vd(complex.deletion(single(x)), caches);
    if (!del_tree) continue;
    CompactPtr link_tree = search_vd(complex.link(single(x)), caches);
    if (!link_tree) continue;
    auto node = std::make_shared<CompactVdNode>();
    node->kind = DecompositionTree::Kind::Shed;
    node->support_index = static_cast<int>(idx);
    node->del = std::move(del_tree);
    node->link = std::move(link_tree);
    result = std::move(node);
  }

  if (caches != nullptr) caches->vd.store(key, result);
  return result;
}

// Translate a compact tree back to original vertex labels by walking the
// complex it certifies.
DecompositionTree materialize(const SimplicialComplex& complex, const CompactVdNode& node) {
  switch (node.kind) {
    case DecompositionTree::Kind::SimplexLeaf:
      return DecompositionTree::simplex_leaf();
    case DecompositionTree::Kind::VoidLeaf:
      return DecompositionTree::void_leaf();
    case DecompositionTree::Kind::Shed:
      break;
  }
  std::vector<int> support = set_to_vector(complex.support());
  int x = support[static_cast<std::size_t>(node.support_index)];
  return DecompositionTree::shed(x, materialize(complex.deletion(single(x)), *node.del),
                                 materialize(complex.link(single(x)), *node.link));
}

}  // namespace

std::optional<DecompositionTree> is_vertex_decomposable(const SimplicialComplex& complex,
                                                        DecompositionCaches* caches) {
  CompactPtr tree = search_vd(complex, caches);
  if (!tree) return std::nullopt;
  return materialize(complex, *tree);
}

namespace {

std::optional<std::vector<int>> search_shelling_indices(const std::vector<VertexSet>& facets) {
  const int s = static_cast<int>(facets.size());
  std::vector<int> order;
  if (s <= 1) {
    if (s == 1) order.push_back(0);
    return order;
  }

  // diff[a][b] = facets[a] \ facets[b]; a singleton difference makes its
  // vertex a witness for placing a after b.
  std::vector<std::vector<VertexSet>> diff(static_cast<std::size_t>(s),
                                           std::vector<VertexSet>(static_cast<std::size_t>(s)));
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) diff[a][b] = facets[a] & ~facets[b];

  std::vector<VertexSet> witness(static_cast<std::size_t>(s), 0);
  std::vector<int> prefix;
  std::vector<bool> used(static_cast<std::size_t>(s), false);
  prefix.reserve(static_cast<std::size_t>(s));

  std::vector<std::vector<VertexSet>> witness_undo;

  auto admissible = [&](int cand) {
    for (int placed : prefix)
      if ((diff[cand][placed] & witness[cand]) == 0) return false;
    return true;
  };

  std::function<bool()> extend = [&]() -> bool {
    if (static_cast<int>(prefix.size()) == s) return true;
    for (int cand = 0; cand < s; ++cand) {
      if (used[static_cast<std::size_t>(cand)]) continue;
      if (!prefix.empty() && !admissible(cand)) continue;
      // Place cand; facets placed later gain witnesses from it.
      witness_undo.push_back(witness);
      for (int a = 0; a < s; ++a)
        if (!used[static_cast<std::size_t>(a)] && a != cand && set_size(diff[a][cand]) == 1)
          witness[static_cast<std::size_t>(a)] |= diff[a][cand];
      used[static_cast<std::size_t>(cand)] = true;
      prefix.push_back(cand);
      if (extend()) return true;
      prefix.pop_back();
      used[static_cast<std::size_t>(cand)] = false;
      witness = witness_undo.back();
      witness_undo.pop_back();
    }
    return false;
  };

  if (extend()) return prefix;
  return std::nullopt;
}

}  // namespace

std::optional<ShellingOrder> is_shellable(const SimplicialComplex& complex,
                                          DecompositionCaches* caches) {
  const std::vector<VertexSet>& facets = complex.facets();
  std::optional<std::vector<int>> indices;
  if (caches != nullptr) {
    std::string key = compact_facet_key(complex);
    if (auto hit = caches->shelling.find(key)) {
      indices = *hit;
    } else {
      indices = search_shelling_indices(facets);
      caches->shelling.store(key, indices);
    }
  } else {
    indices = search_shelling_indices(facets);
  }
  if (!indices) return std::nullopt;
  ShellingOrder order;
  order.reserve(indices->size());
  for (int i : *indices) order.push_back(facets[static_cast<std::size_t>(i)]);
  return order;
}

namespace {

// Tree for the join of two complexes on disjoint vertex sets, given trees
// for the factors: run the first tree and continue with the second wherever
// the first bottoms out in a simplex (a simplex factor rides along without
// affecting shedding steps).
DecompositionTree join_trees(const DecompositionTree& first, const DecompositionTree& second) {
  switch (first.kind) {
    case DecompositionTree::Kind::VoidLeaf:
      return DecompositionTree::void_leaf();
    case DecompositionTree::Kind::SimplexLeaf:
      return second.clone();
    case DecompositionTree::Kind::Shed:
      break;
  }
  return DecompositionTree::shed(first.vertex, join_trees(*first.del, second),
                                 join_trees(*first.link, second));
}

}  // namespace

std::optional<DecompositionTree> is_vd_graph(const Graph& g, DecompositionCaches* caches) {
  if (g.vertex_count() == 0) return DecompositionTree::simplex_leaf();

  std::vector<VertexSet> components = g.connected_components();
  if (components.size() > 1) {
    // A disjoint union is vertex decomposable iff every part is; the
    // independence complex of the union is the join of the parts' complexes.
    std::vector<DecompositionTree> trees;
    for (VertexSet comp : components) {
      auto tree = is_vd_graph(g.delete_vertices(g.vertex_set() & ~comp), caches);
      if (!tree) return std::nullopt;
      trees.push_back(std::move(*tree));
    }
    DecompositionTree combined = std::move(trees.back());
    for (std::size_t i = trees.size() - 1; i-- > 0;)
      combined = join_trees(trees[i], combined);
    return combined;
  }

  if (g.edge_count() == 0) return DecompositionTree::simplex_leaf();

  // Dominated-vertex fast path: if N[x] ⊆ N[y], shedding y works as soon as
  // G - y and G - N[y] are vertex decomposable. Sufficient only; on failure
  // fall through to the exhaustive complex search.
  for (int y : g.labels()) {
    VertexSet closed_y = g.closed_neighborhood(y);
    bool dominates = false;
    for (int x : g.labels()) {
      if (x != y && subset_of(g.closed_neighborhood(x), closed_y)) {
        dominates = true;
        break;
      }
    }
    if (!dominates) continue;
    auto del_tree = is_vd_graph(g.delete_vertices(single(y)), caches);
    if (!del_tree) continue;
    auto link_tree = is_vd_graph(g.delete_vertices(closed_y), caches);
    if (!link_tree) continue;
    return DecompositionTree::shed(y, std::move(*del_tree), std::move(*link_tree));
  }

  return is_vertex_decomposable(independence_complex(g), caches);
}

bool verify_certificate(const SimplicialComplex& complex, const DecompositionTree& tree) {
  switch (tree.kind) {
    case DecompositionTree::Kind::VoidLeaf:
      return complex.is_void();
    case DecompositionTree::Kind::SimplexLeaf:
      return complex.is_simplex();
    case DecompositionTree::Kind::Shed:
      break;
  }
  const int x = tree.vertex;
  if (!set_contains(complex.ground_set(), x)) return false;
  SimplicialComplex del = complex.deletion(single(x));
  for (VertexSet f : del.facets()) {
    if (!std::binary_search(complex.facets().begin(), complex.facets().end(), f)) return false;
  }
  // The link of a vertex lying in no face is the void complex.
  SimplicialComplex link = complex.is_face(single(x))
                               ? complex.link(single(x))
                               : SimplicialComplex::void_complex(complex.ground_set() & ~single(x));
  return verify_certificate(del, *tree.del) && verify_certificate(link, *tree.link);
}

bool verify_certificate(const SimplicialComplex& complex, const ShellingOrder& order) {
  // The order must list exactly the facets, each once.
  std::vector<VertexSet> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != complex.facets()) return false;
  const int s = static_cast<int>(order.size());
  for (int j = 1; j < s; ++j) {
    for (int i = 0; i < j; ++i) {
      bool ok = false;
      for (int l = 0; l < j && !ok; ++l) {
        VertexSet d = order[static_cast<std::size_t>(j)] & ~order[static_cast<std::size_t>(l)];
        if (set_size(d) == 1 &&
            subset_of(d, order[static_cast<std::size_t>(j)] & ~order[static_cast<std::size_t>(i)]))
          ok = true;
      }
      if (!ok) return false;
    }
  }
  return true;
}

bool verify_certificate(const SimplicialComplex& complex, const Certificate& certificate) {
  if (std::holds_alternative<DecompositionTree>(certificate.value))
    return verify_certificate(complex, std::get<DecompositionTree>(certificate.value));
  return verify_certificate(complex, std::get<ShellingOrder>(certificate.value));
}

std::string write_certificate(const DecompositionTree& tree) {
  switch (tree.kind) {
    case DecompositionTree::Kind::SimplexLeaf:
      return "(simplex)";
    case DecompositionTree::Kind::VoidLeaf:
      return "(void)";
    case DecompositionTree::Kind::Shed:
      return "(shed " + std::to_string(tree.vertex) + " " + write_certificate(*tree.del) + " " +
             write_certificate(*tree.link) + ")";
  }
  return "";
}

std::string write_certificate(const ShellingOrder& order) {
  std::string out = "(shelling";
  for (VertexSet f : order) {
    out += " (";
    bool first = true;
    for (int v : set_to_vector(f)) {
      if (!first) out += " ";
      out += std::to_string(v);
      first = false;
    }
    out += ")";
  }
  return out + ")";
}

std::string write_certificate(const Certificate& certificate) {
  if (std::holds_alternative<DecompositionTree>(certificate.value))
    return write_certificate(std::get<DecompositionTree>(certificate.value));
  return write_certificate(std::get<ShellingOrder>(certificate.value));
}

namespace {

struct SexprParser {
  const std::string& text;
  std::size_t pos = 0;

  explicit SexprParser(const std::string& t) : text(t) {}

  void skip_spaces() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw InputError("certificate, offset " + std::to_string(pos) + ": " + msg);
  }

  void expect(char c) {
    skip_spaces();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  bool peek(char c) {
    skip_spaces();
    return pos < text.size() && text[pos] == c;
  }

  std::string token() {
    skip_spaces();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '(' && text[pos] != ')') ++pos;
    if (start == pos) fail("expected a token");
    return text.substr(start, pos - start);
  }

  int number() {
    std::string tok = token();
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) fail("bad number '" + tok + "'");
      return v;
    } catch (const InputError&) {
      throw;
    } catch (const std::exception&) {
      fail("bad number '" + tok + "'");
    }
  }

  DecompositionTree tree() {
    expect('(');
    std::string head = token();
    if (head == "simplex") {
      expect(')');
      return DecompositionTree::simplex_leaf();
    }
    if (head == "void") {
      expect(')');
      return DecompositionTree::void_leaf();
    }
    if (head == "shed") {
      int v = number();
      if (v < 0 || v >= kMaxVertices) fail("shed vertex out of range");
      DecompositionTree del = tree();
      DecompositionTree link = tree();
      expect(')');
      return DecompositionTree::shed(v, std::move(del), std::move(link));
    }
    fail("unknown node kind '" + head + "'");
  }

  ShellingOrder shelling_tail() {
    ShellingOrder order;
    while (peek('(')) {
      expect('(');
      VertexSet f = 0;
      while (!peek(')')) {
        int v = number();
        if (v < 0 || v >= kMaxVertices) fail("facet vertex out of range");
        if (set_contains(f, v)) fail("repeated vertex in facet");
        f |= single(v);
      }
      expect(')');
      order.push_back(f);
    }
    expect(')');
    return order;
  }
};

}  // namespace

Certificate parse_certificate(const std::string& text) {
  SexprParser parser(text);
  parser.expect('(');
  std::string head = parser.token();
  Certificate cert;
  if (head == "shelling") {
    cert.value = parser.shelling_tail();
  } else if (head == "simplex" || head == "void" || head == "shed") {
    // Re-parse from the start as a tree.
    SexprParser tree_parser(text);
    cert.value = tree_parser.tree();
    parser.pos = tree_parser.pos;
  } else {
    parser.fail("unknown certificate kind '" + head + "'");
  }
  parser.skip_spaces();
  if (parser.pos != text.size()) parser.fail("trailing characters");
  return cert;
}

std::string certificate_digest(const std::string& serialized) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : serialized) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

}  // namespace edgeideals
