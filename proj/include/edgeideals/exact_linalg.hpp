#pragma once

#include <cstdint>
#include <vector>

#include "edgeideals/field.hpp"

namespace edgeideals {

/// Dense row-major matrix with small integer entries (boundary matrices have
/// entries in {-1, 0, 1}).
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  std::int64_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  std::int64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

/// Rank over the rationals by fraction-free (Bareiss) elimination. Runs in
/// 64-bit arithmetic with overflow detection and falls back to
/// arbitrary-precision integers, so the result is always exact.
int rank_over_rationals(IntMatrix m);

/// Rank over GF(p) by ordinary Gaussian elimination mod p.
int rank_mod_prime(IntMatrix m, std::uint32_t p);

int rank_over(IntMatrix m, const FieldSpec& field);

}  // namespace edgeideals
