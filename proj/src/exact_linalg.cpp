#include "edgeideals/exact_linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <limits>
#include <optional>

#include "edgeideals/errors.hpp"

namespace edgeideals {

namespace {

using boost::multiprecision::cpp_int;

// One Bareiss elimination pass over 64-bit integers with 128-bit
// intermediates. Returns nullopt if any entry leaves the 64-bit range.
std::optional<int> bareiss_rank_i64(IntMatrix& m) {
  const int rows = m.rows, cols = m.cols;
  int rank = 0;
  std::int64_t prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = 0; c < cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    const std::int64_t piv = m.at(rank, col);
    for (int r = rank + 1; r < rows; ++r) {
      const std::int64_t head = m.at(r, col);
      for (int c = col + 1; c < cols; ++c) {
        __int128 t = static_cast<__int128>(m.at(r, c)) * piv -
                     static_cast<__int128>(head) * m.at(rank, c);
        t /= prev;  // exact by the Bareiss identity
        if (t > std::numeric_limits<std::int64_t>::max() ||
            t < std::numeric_limits<std::int64_t>::min())
          return std::nullopt;
        m.at(r, c) = static_cast<std::int64_t>(t);
      }
      m.at(r, col) = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

int bareiss_rank_big(const IntMatrix& input) {
  const int rows = input.rows, cols = input.cols;
  std::vector<cpp_int> m(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m[static_cast<std::size_t>(r) * cols + c] = input.at(r, c);
  auto at = [&](int r, int c) -> cpp_int& { return m[static_cast<std::size_t>(r) * cols + c]; };
  int rank = 0;
  cpp_int prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = 0; c < cols; ++c) at(pivot, c).swap(at(rank, c));
    const cpp_int piv = at(rank, col);
    for (int r = rank + 1; r < rows; ++r) {
      const cpp_int head = at(r, col);
      for (int c = col + 1; c < cols; ++c) at(r, c) = (at(r, c) * piv - head * at(rank, c)) / prev;
      at(r, col) = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

}  // namespace

int rank_over_rationals(IntMatrix m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  IntMatrix copy = m;
  if (auto r = bareiss_rank_i64(copy)) return *r;
  return bareiss_rank_big(m);
}

int rank_mod_prime(IntMatrix m, std::uint32_t p) {
  if (p < 2) throw InputError("rank_mod_prime: modulus must be at least 2");
  const int rows = m.rows, cols = m.cols;
  if (rows == 0 || cols == 0) return 0;
  const std::int64_t mod = p;
  std::vector<std::uint32_t> a(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      std::int64_t v = m.at(r, c) % mod;
      if (v < 0) v += mod;
      a[static_cast<std::size_t>(r) * cols + c] = static_cast<std::uint32_t>(v);
    }
  auto at = [&](int r, int c) -> std::uint32_t& {
    return a[static_cast<std::size_t>(r) * cols + c];
  };
  auto inv_mod = [&](std::uint64_t x) {
    // Fermat: x^(p-2) mod p.
    std::uint64_t result = 1, base = x % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = col; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
    const std::uint64_t inv = inv_mod(at(rank, col));
    for (int r = rank + 1; r < rows; ++r) {
      if (at(r, col) == 0) continue;
      const std::uint64_t factor = at(r, col) * inv % p;
      for (int c = col; c < cols; ++c) {
        std::uint64_t sub = factor * at(rank, c) % p;
        std::uint64_t v = at(r, c) + p - sub;
        at(r, c) = static_cast<std::uint32_t>(v % p);
      }
    }
    ++rank;
  }
  return rank;
}

int rank_over(IntMatrix m, const FieldSpec& field) {
  return field.is_rationals() ? rank_over_rationals(std::move(m))
                              : rank_mod_prime(std::move(m), field.prime);
}

}  // namespace edgeideals
