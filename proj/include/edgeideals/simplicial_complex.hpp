#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "edgeideals/vertex_set.hpp"

namespace edgeideals {

class Graph;

/// Face counts by dimension; counts[k] is the number of faces of dimension
/// k-1, so counts[0] counts the empty face.
struct FVector {
  std::vector<long long> counts;

  long long faces_of_dim(int d) const {
    std::size_t k = static_cast<std::size_t>(d + 1);
    return k < counts.size() ? counts[k] : 0;
  }
  long long total() const;

  friend bool operator==(const FVector&, const FVector&) = default;
};

/// Simplicial complex stored by its facets (maximal faces) over an explicit
/// ground set. The ground set and the faces are decoupled: a ground vertex
/// may lie in no face at all, which keeps link and deletion closed
/// operations. Two degenerate complexes are distinguished:
///
///   void complex       — no faces at all (empty facet list);
///   irrelevant complex — the single facet ∅, whose only face is ∅.
class SimplicialComplex {
 public:
  /// Below every real dimension; the void complex has no faces of any
  /// dimension, so loops `for (int d = -1; d <= dimension(); ++d)` skip it.
  static constexpr int kVoidDimension = -2;

  SimplicialComplex() = default;  // void complex on the empty ground set

  static SimplicialComplex void_complex(VertexSet ground);
  static SimplicialComplex irrelevant_complex(VertexSet ground);
  static SimplicialComplex simplex(VertexSet ground);

  /// Validates the antichain and containment invariants.
  static SimplicialComplex from_facets(VertexSet ground, std::vector<VertexSet> facets);

  /// Complex generated by the given faces: keeps the maximal ones.
  static SimplicialComplex generated_by(VertexSet ground, const std::vector<VertexSet>& faces);

  VertexSet ground_set() const { return ground_; }
  /// Sorted ascending by mask value; an antichain under inclusion.
  const std::vector<VertexSet>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const { return facets_.size() == 1 && facets_[0] == 0; }
  bool is_simplex() const { return facets_.size() == 1; }

  /// Union of all faces; a subset of (possibly smaller than) the ground set.
  VertexSet support() const;

  bool is_face(VertexSet f) const;
  int dimension() const;
  bool is_pure() const;

  /// Faces H with H ∩ F = ∅ and H ∪ F a face, on ground set minus F.
  /// F must be a face.
  SimplicialComplex link(VertexSet f) const;

  /// Faces H with H ∩ F = ∅, on ground set minus F.
  SimplicialComplex deletion(VertexSet f) const;

  /// Faces contained in W, on ground set W. W must lie in the ground set.
  SimplicialComplex restriction(VertexSet w) const;

  /// Complex generated by all faces of dimension exactly d, for
  /// -1 <= d <= dimension().
  SimplicialComplex pure_skeleton(int d) const;

  /// Every face including ∅ (for non-void complexes), sorted by
  /// (cardinality, mask).
  std::vector<VertexSet> all_faces() const;
  FVector f_vector() const;
  long long face_count() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  VertexSet ground_ = 0;
  std::vector<VertexSet> facets_;
};

/// Facets of the independence complex are the maximal independent sets.
SimplicialComplex independence_complex(const Graph& g);

// Facet-list text format: `g <ground_size>` then one `f <v1> <v2> ...` line
// per facet with vertices ascending; a bare `f` is the empty facet; no `f`
// lines at all is the void complex. Ground sets are written compacted to
// 0..k-1.
SimplicialComplex read_facet_list(std::istream& in);
std::string write_facet_list(const SimplicialComplex& c);

/// Memo key: facets relabeled onto 0..k-1 along the sorted support. Complexes
/// that differ only by unused ground vertices share a key; homology, purity,
/// Cohen-Macaulayness, decomposability and shellability all agree on them.
std::string compact_facet_key(const SimplicialComplex& c);

}  // namespace edgeideals
