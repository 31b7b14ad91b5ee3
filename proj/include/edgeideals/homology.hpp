#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "edgeideals/concurrent_cache.hpp"
#include "edgeideals/field.hpp"
#include "edgeideals/ideals.hpp"
#include "edgeideals/simplicial_complex.hpp"

namespace edgeideals {

/// Dimensions of reduced homology over the chosen field; dims[k] is
/// dim H~_{k-1}, so dims[0] refers to degree -1. Empty for the void complex.
struct HomologyProfile {
  std::vector<int> dims;

  int dim(int d) const {
    std::size_t k = static_cast<std::size_t>(d + 1);
    return (d >= -1 && k < dims.size()) ? dims[k] : 0;
  }
  bool all_zero() const {
    for (int d : dims)
      if (d != 0) return false;
    return true;
  }

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Graded Betti numbers of a quotient ring R/I. Only nonzero entries are
/// stored, plus beta_{0,0} = 1 for proper ideals.
struct BettiTable {
  std::string subject;
  std::map<std::pair<int, int>, long long> entries;

  long long at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.entries == b.entries;
  }
};

/// max { j - i : beta_{i,j} != 0 }; the table must be nonempty.
int regularity(const BettiTable& table);

/// max { i : beta_{i,j} != 0 }; the table must be nonempty.
int projective_dimension(const BettiTable& table);

/// Shared memo tables for the homological oracles. All entries are pure
/// functions of (field, compacted facet set), so concurrent workers may
/// share one instance freely.
class AlgebraCaches {
 public:
  ConcurrentCache<HomologyProfile> homology;
  ConcurrentCache<bool> cohen_macaulay;
  ConcurrentCache<bool> sequentially_cm;
};

/// Reduced simplicial homology dimensions over k, from boundary-matrix ranks
/// in exact arithmetic. The empty face is part of the chain complex, so the
/// irrelevant complex has dim H~_{-1} = 1 and a nonempty simplex is acyclic.
HomologyProfile reduced_homology(const SimplicialComplex& complex, const FieldSpec& k,
                                 AlgebraCaches* caches = nullptr);

/// Reisner's criterion: every face's link has vanishing reduced homology
/// below its dimension. The void complex is rejected.
bool is_cohen_macaulay(const SimplicialComplex& complex, const FieldSpec& k,
                       AlgebraCaches* caches = nullptr);

/// Duval's criterion: every pure skeleton (dimensions -1..dim) is
/// Cohen-Macaulay over k. The void complex is rejected.
bool is_sequentially_cm(const SimplicialComplex& complex, const FieldSpec& k,
                        AlgebraCaches* caches = nullptr);

/// Graded Betti numbers of R/I by Hochster's formula:
///   beta_{i,j}(R/I) = sum over |W| = j of dim H~_{j-i-1}(D|_W; k),
/// where D is the Stanley-Reisner complex of I. Requires a proper ideal.
BettiTable hochster_betti(const SquareFreeMonomialIdeal& ideal, const FieldSpec& k,
                          AlgebraCaches* caches = nullptr);

// Betti-table text format: `subject <name>` then `b <i> <j> <multiplicity>`
// sorted by (i, j).
std::string write_betti_table(const BettiTable& table);
BettiTable read_betti_table(std::istream& in);

}  // namespace edgeideals
