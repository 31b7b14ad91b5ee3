#include "edgeideals/ideals.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include "edgeideals/errors.hpp"
#include "edgeideals/graph.hpp"

namespace edgeideals {

namespace {

// Minimal elements of a family of sets, sorted, duplicates removed.
std::vector<VertexSet> prune_to_minimal(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i != j && subset_of(sets[j], sets[i]) && sets[i] != sets[j]) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(sets[i]);
  }
  return out;
}

}  // namespace

SquareFreeMonomialIdeal SquareFreeMonomialIdeal::zero(VertexSet ground) {
  SquareFreeMonomialIdeal ideal;
  ideal.ground_ = ground;
  return ideal;
}

SquareFreeMonomialIdeal SquareFreeMonomialIdeal::unit(VertexSet ground) {
  SquareFreeMonomialIdeal ideal;
  ideal.ground_ = ground;
  ideal.unit_ = true;
  return ideal;
}

SquareFreeMonomialIdeal SquareFreeMonomialIdeal::from_generators(VertexSet ground,
                                                                 std::vector<VertexSet> gens) {
  for (VertexSet g : gens)
    if (!subset_of(g, ground))
      throw InputError("ideal: generator " + set_to_string(g) + " not in ground set");
  for (VertexSet g : gens)
    if (g == 0) return unit(ground);  // the empty product is 1
  SquareFreeMonomialIdeal ideal;
  ideal.ground_ = ground;
  ideal.gens_ = prune_to_minimal(std::move(gens));
  return ideal;
}

SquareFreeMonomialIdeal SquareFreeMonomialIdeal::embedded_in(VertexSet ground) const {
  if (!subset_of(ground_, ground))
    throw InputError("ideal: ambient ground set must contain the current one");
  SquareFreeMonomialIdeal ideal = *this;
  ideal.ground_ = ground;
  return ideal;
}

SquareFreeMonomialIdeal SquareFreeMonomialIdeal::scaled_by(VertexSet monomial) const {
  if (!subset_of(monomial, ground_))
    throw InputError("ideal: scaling monomial outside the ground set");
  if (unit_) {
    // m * R is generated by m alone.
    SquareFreeMonomialIdeal ideal;
    ideal.ground_ = ground_;
    if (monomial == 0) return unit(ground_);
    ideal.gens_ = {monomial};
    return ideal;
  }
  std::vector<VertexSet> gens;
  gens.reserve(gens_.size());
  for (VertexSet g : gens_) {
    if ((g & monomial) != 0)
      throw InputError("ideal: scaling monomial must avoid the generator supports");
    gens.push_back(g | monomial);
  }
  SquareFreeMonomialIdeal ideal;
  ideal.ground_ = ground_;
  ideal.gens_ = std::move(gens);  // still an antichain after a disjoint shift
  std::sort(ideal.gens_.begin(), ideal.gens_.end());
  return ideal;
}

SquareFreeMonomialIdeal SquareFreeMonomialIdeal::plus(const SquareFreeMonomialIdeal& other) const {
  if (ground_ != other.ground_) throw InputError("ideal: sum needs a common ground set");
  if (unit_ || other.unit_) return unit(ground_);
  std::vector<VertexSet> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return from_generators(ground_, std::move(gens));
}

SquareFreeMonomialIdeal SquareFreeMonomialIdeal::intersect(
    const SquareFreeMonomialIdeal& other) const {
  if (ground_ != other.ground_) throw InputError("ideal: intersection needs a common ground set");
  if (unit_) return other;
  if (other.unit_) return *this;
  std::vector<VertexSet> gens;
  gens.reserve(gens_.size() * other.gens_.size());
  for (VertexSet a : gens_)
    for (VertexSet b : other.gens_) gens.push_back(a | b);  // lcm of square-free monomials
  return from_generators(ground_, std::move(gens));
}

SquareFreeMonomialIdeal edge_ideal(const Graph& g) {
  std::vector<VertexSet> gens;
  for (const auto& [u, v] : g.edges()) gens.push_back(single(u) | single(v));
  return SquareFreeMonomialIdeal::from_generators(g.vertex_set(), std::move(gens));
}

std::vector<VertexSet> minimal_vertex_covers(const Graph& g) {
  const SimplicialComplex complex = independence_complex(g);
  std::vector<VertexSet> covers;
  for (VertexSet f : complex.facets()) covers.push_back(g.vertex_set() & ~f);
  std::sort(covers.begin(), covers.end());
  return covers;
}

SquareFreeMonomialIdeal cover_ideal(const Graph& g) {
  return SquareFreeMonomialIdeal::from_generators(g.vertex_set(), minimal_vertex_covers(g));
}

SquareFreeMonomialIdeal alexander_dual(const SquareFreeMonomialIdeal& ideal) {
  if (ideal.is_unit()) throw InputError("alexander_dual: unit ideal");
  if (ideal.is_zero()) throw InputError("alexander_dual: zero ideal");
  // Incremental transversal construction: cross the partial transversals with
  // each next generator and keep the minimal ones.
  std::vector<VertexSet> transversals = {0u};
  for (VertexSet gen : ideal.generators()) {
    std::vector<VertexSet> next;
    next.reserve(transversals.size() * static_cast<std::size_t>(set_size(gen)));
    for (VertexSet t : transversals) {
      if ((t & gen) != 0) {
        next.push_back(t);  // already hits this generator
        continue;
      }
      for (VertexSet m = gen; m != 0; m &= m - 1) next.push_back(t | single(lowest_vertex(m)));
    }
    transversals = prune_to_minimal(std::move(next));
  }
  return SquareFreeMonomialIdeal::from_generators(ideal.ground_set(), std::move(transversals));
}

namespace {

// All maximal subsets of `ground` containing no generator, by branching on
// the vertices of a violated generator.
void maximal_generator_free(VertexSet allowed, const std::vector<VertexSet>& gens,
                            std::set<VertexSet>& visited, std::vector<VertexSet>& out) {
  if (!visited.insert(allowed).second) return;
  for (VertexSet g : gens) {
    if (subset_of(g, allowed)) {
      for (VertexSet m = g; m != 0; m &= m - 1)
        maximal_generator_free(allowed & ~single(lowest_vertex(m)), gens, visited, out);
      return;
    }
  }
  out.push_back(allowed);
}

}  // namespace

SimplicialComplex stanley_reisner_complex(const SquareFreeMonomialIdeal& ideal) {
  if (ideal.is_unit()) throw InputError("stanley_reisner_complex: unit ideal");
  if (ideal.is_zero()) return SimplicialComplex::simplex(ideal.ground_set());
  std::set<VertexSet> visited;
  std::vector<VertexSet> candidates;
  maximal_generator_free(ideal.ground_set(), ideal.generators(), visited, candidates);
  return SimplicialComplex::generated_by(ideal.ground_set(), candidates);
}

bool is_unmixed(const Graph& g) {
  std::vector<VertexSet> covers = minimal_vertex_covers(g);
  if (covers.empty()) return true;
  int card = set_size(covers.front());
  for (VertexSet c : covers)
    if (set_size(c) != card) return false;
  return true;
}

CoverIdealSplitting cover_ideal_splitting(const Graph& g, int x) {
  if (!g.has_vertex(x)) throw InputError("cover_ideal_splitting: unknown vertex");
  if (g.degree(x) != 1) throw InputError("cover_ideal_splitting: vertex must have degree 1");
  const int y = lowest_vertex(g.neighbors(x));
  const VertexSet ambient = g.vertex_set();

  CoverIdealSplitting split;
  split.x = x;
  split.y = y;
  split.scale_monomial = g.neighbors(y);  // contains x and y's other neighbours
  split.g_prime = g.closed_neighborhood_delete(y);
  split.g_dblprime = g.closed_neighborhood_delete(x);

  const SquareFreeMonomialIdeal lhs = cover_ideal(g);
  const SquareFreeMonomialIdeal prime_dual = cover_ideal(split.g_prime).embedded_in(ambient);
  const SquareFreeMonomialIdeal dbl_dual = cover_ideal(split.g_dblprime).embedded_in(ambient);

  const SquareFreeMonomialIdeal left = prime_dual.scaled_by(split.scale_monomial);
  const SquareFreeMonomialIdeal right = dbl_dual.scaled_by(single(y));
  split.claim1_holds = (left.plus(right) == lhs);

  const SquareFreeMonomialIdeal both = prime_dual.scaled_by(split.scale_monomial | single(y));
  split.claim2_holds = (left.intersect(right) == both);
  return split;
}

SquareFreeMonomialIdeal read_ideal(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_header = false, unit = false;
  int ground_size = 0;
  std::vector<VertexSet> gens;
  auto fail = [&](const std::string& msg) {
    throw InputError("ideal, line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string kind;
    ss >> kind;
    if (!have_header) {
      if (kind != "n") fail("expected header 'n <ground_size>'");
      if (!(ss >> ground_size)) fail("bad ground size");
      if (ground_size < 0 || ground_size > kMaxVertices) fail("ground size out of range");
      have_header = true;
      continue;
    }
    if (kind == "unit") {
      unit = true;
      continue;
    }
    if (kind != "m") fail("expected generator line 'm <v1> <v2> ...'");
    VertexSet gen = 0;
    int v = 0, prev = -1;
    while (ss >> v) {
      if (v < 0 || v >= ground_size) fail("vertex out of range");
      if (v <= prev) fail("generator vertices must be strictly ascending");
      gen |= single(v);
      prev = v;
    }
    if (gen == 0) fail("empty generator; use 'unit' for the unit ideal");
    gens.push_back(gen);
  }
  if (!have_header) throw InputError("ideal: missing 'n <ground_size>' header");
  if (unit) {
    if (!gens.empty()) throw InputError("ideal: unit ideal cannot list generators");
    return SquareFreeMonomialIdeal::unit(full_set(ground_size));
  }
  return SquareFreeMonomialIdeal::from_generators(full_set(ground_size), std::move(gens));
}

std::string write_ideal(const SquareFreeMonomialIdeal& ideal) {
  std::vector<int> ground = set_to_vector(ideal.ground_set());
  std::vector<int> to_new(32, -1);
  for (std::size_t i = 0; i < ground.size(); ++i)
    to_new[static_cast<std::size_t>(ground[i])] = static_cast<int>(i);
  std::string out = "n " + std::to_string(ground.size()) + "\n";
  if (ideal.is_unit()) {
    out += "unit\n";
    return out;
  }
  for (VertexSet gen : ideal.generators()) {
    out += "m";
    for (int v : set_to_vector(gen)) out += " " + std::to_string(to_new[static_cast<std::size_t>(v)]);
    out += "\n";
  }
  return out;
}

}  // namespace edgeideals
