#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "edgeideals/graph.hpp"
#include "edgeideals/simplicial_complex.hpp"
#include "edgeideals/vertex_set.hpp"

namespace edgeideals {

/// Square-free monomial ideal, stored by the supports of its minimal
/// generators. The generator list is always an antichain under inclusion.
/// The unit ideal (generated by 1) has an empty generator list and the unit
/// flag set; the zero ideal has an empty list and the flag unset.
class SquareFreeMonomialIdeal {
 public:
  SquareFreeMonomialIdeal() = default;  // zero ideal on empty ground

  static SquareFreeMonomialIdeal zero(VertexSet ground);
  static SquareFreeMonomialIdeal unit(VertexSet ground);

  /// Minimalizes the generating set; a generator with empty support makes
  /// the ideal the unit ideal.
  static SquareFreeMonomialIdeal from_generators(VertexSet ground, std::vector<VertexSet> gens);

  VertexSet ground_set() const { return ground_; }
  const std::vector<VertexSet>& generators() const { return gens_; }
  bool is_unit() const { return unit_; }
  bool is_zero() const { return !unit_ && gens_.empty(); }
  bool is_proper() const { return !unit_; }

  /// Same generators viewed in a larger ambient ring.
  SquareFreeMonomialIdeal embedded_in(VertexSet ground) const;

  /// m * I for a square-free monomial m whose support avoids every
  /// generator (the product then stays square-free).
  SquareFreeMonomialIdeal scaled_by(VertexSet monomial) const;

  SquareFreeMonomialIdeal plus(const SquareFreeMonomialIdeal& other) const;
  SquareFreeMonomialIdeal intersect(const SquareFreeMonomialIdeal& other) const;

  friend bool operator==(const SquareFreeMonomialIdeal&, const SquareFreeMonomialIdeal&) = default;

 private:
  VertexSet ground_ = 0;
  std::vector<VertexSet> gens_;  // sorted ascending by mask
  bool unit_ = false;
};

/// One generator uv per edge; the edgeless graph gives the zero ideal.
SquareFreeMonomialIdeal edge_ideal(const Graph& g);

/// All inclusion-minimal vertex covers, as complements of the maximal
/// independent sets. Sorted ascending by mask.
std::vector<VertexSet> minimal_vertex_covers(const Graph& g);

/// Generated by the products over minimal vertex covers; the edgeless graph
/// gives the unit ideal (empty cover, empty product).
SquareFreeMonomialIdeal cover_ideal(const Graph& g);

/// Minimal transversals (hitting sets) of the generator supports. Requires a
/// proper nonzero ideal; an involution on such ideals.
SquareFreeMonomialIdeal alexander_dual(const SquareFreeMonomialIdeal& ideal);

/// Faces are the subsets of the ground set containing no generator support.
/// Requires a proper ideal.
SimplicialComplex stanley_reisner_complex(const SquareFreeMonomialIdeal& ideal);

/// True iff all minimal vertex covers share one cardinality.
bool is_unmixed(const Graph& g);

/// The two subgraphs and the two generating-set identities used to split a
/// cover ideal at a degree-one vertex x with neighbour y:
///
///   claim1:  I(G)^v = m * I(G')^v + y * I(G'')^v  with m = prod over N(y),
///   claim2:  m * I(G')^v  ∩  y * I(G'')^v  =  y * m * I(G')^v,
///
/// where G' = G - N[y] and G'' = G - N[x], with all ideals viewed in the
/// ambient ring of G.
struct CoverIdealSplitting {
  int x = -1;
  int y = -1;
  VertexSet scale_monomial = 0;  // N(y), i.e. {x} together with y's other neighbours
  Graph g_prime;
  Graph g_dblprime;
  bool claim1_holds = false;
  bool claim2_holds = false;
};

CoverIdealSplitting cover_ideal_splitting(const Graph& g, int x);

// Ideal text format: `n <ground_size>` then one `m <v1> <v2> ...` line per
// generator (vertices ascending); the single keyword line `unit` denotes the
// unit ideal; no generator lines denote the zero ideal.
SquareFreeMonomialIdeal read_ideal(std::istream& in);
std::string write_ideal(const SquareFreeMonomialIdeal& ideal);

}  // namespace edgeideals
