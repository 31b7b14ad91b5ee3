#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "edgeideals/concurrent_cache.hpp"
#include "edgeideals/simplicial_complex.hpp"

namespace edgeideals {

class Graph;

/// Shedding-vertex decomposition tree. A SHED node records the shedding
/// vertex together with subtrees for the deletion and the link; leaves are
/// simplices (which includes the irrelevant complex) or the void complex.
struct DecompositionTree {
  enum class Kind { SimplexLeaf, VoidLeaf, Shed };

  Kind kind = Kind::SimplexLeaf;
  int vertex = -1;
  std::unique_ptr<DecompositionTree> del;
  std::unique_ptr<DecompositionTree> link;

  static DecompositionTree simplex_leaf();
  static DecompositionTree void_leaf();
  static DecompositionTree shed(int vertex, DecompositionTree del, DecompositionTree link);

  DecompositionTree clone() const;
  bool equals(const DecompositionTree& other) const;
};

/// Ordered facet list F_1..F_s; valid when for every i < j some
/// x in F_j \ F_i and some l < j satisfy F_j \ F_l = {x}.
using ShellingOrder = std::vector<VertexSet>;

struct Certificate {
  std::variant<DecompositionTree, ShellingOrder> value;
};

namespace detail {
struct CompactVdNode;
}

/// Memo tables for the decomposability searches, keyed by the compacted
/// facet encoding. Safe to share across threads.
class DecompositionCaches {
 public:
  ConcurrentCache<std::shared_ptr<const detail::CompactVdNode>> vd;
  ConcurrentCache<std::optional<std::vector<int>>> shelling;
};

/// Searches for a shedding-vertex decomposition, trying candidates in
/// ascending vertex order; the first success wins, so certificates are
/// deterministic. Absent means the complex is not vertex decomposable.
std::optional<DecompositionTree> is_vertex_decomposable(const SimplicialComplex& complex,
                                                        DecompositionCaches* caches = nullptr);

/// Backtracking search over facet orderings with incremental pruning.
std::optional<ShellingOrder> is_shellable(const SimplicialComplex& complex,
                                          DecompositionCaches* caches = nullptr);

/// Decides vertex decomposability of the independence complex, first
/// splitting into connected components and then trying the dominated-vertex
/// reduction (if N[x] ⊆ N[y], it suffices that G - y and G - N[y] are vertex
/// decomposable); on failure of the fast path it falls back to the full
/// complex search, so the answer is always exact.
std::optional<DecompositionTree> is_vd_graph(const Graph& g,
                                             DecompositionCaches* caches = nullptr);

/// Replays a certificate against the complex using only the definitional
/// checks; no search. False means the certificate does not certify.
bool verify_certificate(const SimplicialComplex& complex, const DecompositionTree& tree);
bool verify_certificate(const SimplicialComplex& complex, const ShellingOrder& order);
bool verify_certificate(const SimplicialComplex& complex, const Certificate& certificate);

// Certificate text form: s-expressions such as `(shed 3 (simplex) (void))`
// and `(shelling (1 3) (2 4))`; the empty facet is `()`.
std::string write_certificate(const DecompositionTree& tree);
std::string write_certificate(const ShellingOrder& order);
std::string write_certificate(const Certificate& certificate);
Certificate parse_certificate(const std::string& text);

/// FNV-1a digest of the serialized certificate, as 16 hex digits.
std::string certificate_digest(const std::string& serialized);

}  // namespace edgeideals
