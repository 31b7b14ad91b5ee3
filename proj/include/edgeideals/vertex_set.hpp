#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace edgeideals {

// Vertices are dense non-negative integer labels; a VertexSet is a bit mask
// over them. One machine word covers every target workload.
using VertexSet = std::uint32_t;

inline constexpr int kMaxVertices = 24;

inline constexpr VertexSet full_set(int n) {
  return n <= 0 ? 0u : ((VertexSet{1} << n) - 1u);
}

inline constexpr VertexSet single(int v) { return VertexSet{1} << v; }

inline int set_size(VertexSet s) { return std::popcount(s); }

inline bool set_contains(VertexSet s, int v) {
  return v >= 0 && v < 32 && ((s >> v) & 1u) != 0;
}

inline bool subset_of(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

// Lowest-labeled vertex; only meaningful for non-empty sets.
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

inline std::vector<int> set_to_vector(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  for (VertexSet m = s; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

inline std::string set_to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (VertexSet m = s; m != 0; m &= m - 1) {
    if (!first) out += ",";
    out += std::to_string(std::countr_zero(m));
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace edgeideals
