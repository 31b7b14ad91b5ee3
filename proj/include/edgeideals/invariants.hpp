#pragma once

#include <utility>
#include <vector>

#include "edgeideals/graph.hpp"

namespace edgeideals {

/// Two edges are 3-disjoint when the induced subgraph on their four
/// endpoints consists of exactly those two edges; equivalently the
/// complement induces a four-cycle on the endpoints. Both characterizations
/// are computed and compared. The arguments must be edges of g.
bool is_three_disjoint(const Graph& g, std::pair<int, int> e1, std::pair<int, int> e2);

/// Maximum number of pairwise 3-disjoint edges (the induced matching
/// number), by branch and bound over edges in lexicographic order.
int a_invariant(const Graph& g);

/// The lexicographically first maximum set of pairwise 3-disjoint edges.
std::vector<std::pair<int, int>> a_invariant_witness(const Graph& g);

/// Maximum matching size; exact for all graphs.
int matching_number(const Graph& g);

}  // namespace edgeideals
