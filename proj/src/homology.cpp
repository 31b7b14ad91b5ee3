#include "edgeideals/homology.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <sstream>

#include "edgeideals/errors.hpp"
#include "edgeideals/exact_linalg.hpp"

namespace edgeideals {

int regularity(const BettiTable& table) {
  if (table.entries.empty()) throw InputError("regularity: empty Betti table");
  int best = std::numeric_limits<int>::min();
  for (const auto& [ij, mult] : table.entries)
    if (mult != 0) best = std::max(best, ij.second - ij.first);
  return best;
}

int projective_dimension(const BettiTable& table) {
  if (table.entries.empty()) throw InputError("projective_dimension: empty Betti table");
  int best = 0;
  for (const auto& [ij, mult] : table.entries)
    if (mult != 0) best = std::max(best, ij.first);
  return best;
}

namespace {

// Homology of the complex spanned by `facets`; the ground set is irrelevant.
HomologyProfile homology_of_facets(const std::vector<VertexSet>& facets, const FieldSpec& k) {
  HomologyProfile profile;
  if (facets.empty()) return profile;  // void: no faces, all homology zero

  // Enumerate all faces grouped by cardinality; level c holds the faces with
  // c vertices (dimension c-1), level 0 is the empty face.
  int top = 0;
  for (VertexSet f : facets) top = std::max(top, set_size(f));
  std::vector<std::vector<VertexSet>> levels(static_cast<std::size_t>(top) + 1);
  {
    std::vector<VertexSet> faces;
    for (VertexSet t : facets) {
      VertexSet sub = t;
      while (true) {
        faces.push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & t;
      }
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (VertexSet f : faces) levels[static_cast<std::size_t>(set_size(f))].push_back(f);
    for (auto& level : levels) std::sort(level.begin(), level.end());
  }

  // ranks[c] = rank of the boundary map from level c to level c-1.
  std::vector<int> ranks(static_cast<std::size_t>(top) + 2, 0);
  for (int c = 1; c <= top; ++c) {
    const auto& domain = levels[static_cast<std::size_t>(c)];
    const auto& codomain = levels[static_cast<std::size_t>(c - 1)];
    IntMatrix m(static_cast<int>(codomain.size()), static_cast<int>(domain.size()));
    for (int col = 0; col < m.cols; ++col) {
      VertexSet face = domain[static_cast<std::size_t>(col)];
      int position = 0;
      for (VertexSet rest = face; rest != 0; rest &= rest - 1, ++position) {
        VertexSet sub = face & ~single(lowest_vertex(rest));
        auto it = std::lower_bound(codomain.begin(), codomain.end(), sub);
        int row = static_cast<int>(it - codomain.begin());
        m.at(row, col) = (position % 2 == 0) ? 1 : -1;
      }
    }
    ranks[static_cast<std::size_t>(c)] = rank_over(std::move(m), k);
  }

  profile.dims.resize(static_cast<std::size_t>(top) + 1);
  for (int c = 0; c <= top; ++c) {
    long long faces = static_cast<long long>(levels[static_cast<std::size_t>(c)].size());
    profile.dims[static_cast<std::size_t>(c)] =
        static_cast<int>(faces - ranks[static_cast<std::size_t>(c)] -
                         ranks[static_cast<std::size_t>(c + 1)]);
  }
  return profile;
}

std::string cache_key(const FieldSpec& k, const SimplicialComplex& complex) {
  return k.to_string() + "|" + compact_facet_key(complex);
}

HomologyProfile cached_homology(const SimplicialComplex& complex, const FieldSpec& k,
                                AlgebraCaches* caches) {
  if (caches == nullptr) return homology_of_facets(complex.facets(), k);
  std::string key = cache_key(k, complex);
  if (auto hit = caches->homology.find(key)) return *hit;
  HomologyProfile profile = homology_of_facets(complex.facets(), k);
  caches->homology.store(key, profile);
  return profile;
}

}  // namespace

HomologyProfile reduced_homology(const SimplicialComplex& complex, const FieldSpec& k,
                                 AlgebraCaches* caches) {
  return cached_homology(complex, k, caches);
}

bool is_cohen_macaulay(const SimplicialComplex& complex, const FieldSpec& k,
                       AlgebraCaches* caches) {
  if (complex.is_void()) throw InputError("is_cohen_macaulay: void complex");
  std::string key;
  if (caches != nullptr) {
    key = cache_key(k, complex);
    if (auto hit = caches->cohen_macaulay.find(key)) return *hit;
  }
  bool result = true;
  for (VertexSet face : complex.all_faces()) {
    // Facets of the link of `face` are T \ face for facets T containing it.
    std::vector<VertexSet> link_facets;
    for (VertexSet t : complex.facets())
      if (subset_of(face, t)) link_facets.push_back(t & ~face);
    std::sort(link_facets.begin(), link_facets.end());
    int link_dim = -1;
    for (VertexSet f : link_facets) link_dim = std::max(link_dim, set_size(f) - 1);
    SimplicialComplex link = SimplicialComplex::from_facets(complex.ground_set() & ~face,
                                                            std::move(link_facets));
    HomologyProfile profile = cached_homology(link, k, caches);
    for (int d = -1; d < link_dim; ++d) {
      if (profile.dim(d) != 0) {
        result = false;
        break;
      }
    }
    if (!result) break;
  }
  if (caches != nullptr) caches->cohen_macaulay.store(key, result);
  return result;
}

bool is_sequentially_cm(const SimplicialComplex& complex, const FieldSpec& k,
                        AlgebraCaches* caches) {
  if (complex.is_void()) throw InputError("is_sequentially_cm: void complex");
  std::string key;
  if (caches != nullptr) {
    key = cache_key(k, complex);
    if (auto hit = caches->sequentially_cm.find(key)) return *hit;
  }
  bool result = true;
  for (int d = -1; d <= complex.dimension(); ++d) {
    if (!is_cohen_macaulay(complex.pure_skeleton(d), k, caches)) {
      result = false;
      break;
    }
  }
  if (caches != nullptr) caches->sequentially_cm.store(key, result);
  return result;
}

BettiTable hochster_betti(const SquareFreeMonomialIdeal& ideal, const FieldSpec& k,
                          AlgebraCaches* caches) {
  if (ideal.is_unit()) throw InputError("hochster_betti: unit ideal");
  const SimplicialComplex complex = stanley_reisner_complex(ideal);
  const VertexSet ground = ideal.ground_set();
  BettiTable table;
  table.subject = "R/I";

  // Every subset W of the ground set contributes the homology of the induced
  // subcomplex on W. Restriction facets come straight from the facets of the
  // full complex.
  const std::vector<VertexSet>& facets = complex.facets();
  std::vector<int> ground_vertices = set_to_vector(ground);
  const int n = static_cast<int>(ground_vertices.size());
  std::vector<VertexSet> restricted;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    VertexSet w = 0;
    for (int i = 0; i < n; ++i)
      if ((bits >> i) & 1u) w |= single(ground_vertices[static_cast<std::size_t>(i)]);
    restricted.clear();
    for (VertexSet t : facets) restricted.push_back(t & w);
    std::sort(restricted.begin(), restricted.end());
    restricted.erase(std::unique(restricted.begin(), restricted.end()), restricted.end());
    // Prune to maximal ones so the facet invariant (and the cache key) holds.
    std::vector<VertexSet> maximal;
    for (std::size_t i = 0; i < restricted.size(); ++i) {
      bool keep = true;
      for (std::size_t j = 0; j < restricted.size(); ++j)
        if (i != j && subset_of(restricted[i], restricted[j])) {
          keep = false;
          break;
        }
      if (keep) maximal.push_back(restricted[i]);
    }
    SimplicialComplex part = SimplicialComplex::from_facets(w, std::move(maximal));
    HomologyProfile profile = cached_homology(part, k, caches);
    const int j = set_size(w);
    for (int d = -1; d < static_cast<int>(profile.dims.size()) - 1; ++d) {
      int h = profile.dim(d);
      if (h == 0) continue;
      table.entries[{j - d - 1, j}] += h;
    }
  }
  return table;
}

std::string write_betti_table(const BettiTable& table) {
  std::string out = "subject " + (table.subject.empty() ? std::string("R/I") : table.subject) + "\n";
  for (const auto& [ij, mult] : table.entries)
    out += "b " + std::to_string(ij.first) + " " + std::to_string(ij.second) + " " +
           std::to_string(mult) + "\n";
  return out;
}

BettiTable read_betti_table(std::istream& in) {
  BettiTable table;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  auto fail = [&](const std::string& msg) {
    throw InputError("betti table, line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string kind;
    ss >> kind;
    if (!have_header) {
      if (kind != "subject") fail("expected header 'subject <name>'");
      ss >> table.subject;
      have_header = true;
      continue;
    }
    if (kind != "b") fail("expected entry line 'b <i> <j> <multiplicity>'");
    int i = 0, j = 0;
    long long mult = 0;
    if (!(ss >> i >> j >> mult)) fail("bad entry");
    if (mult < 1) fail("multiplicities must be positive");
    if (!table.entries.emplace(std::pair{i, j}, mult).second) fail("duplicate entry");
  }
  if (!have_header) throw InputError("betti table: missing 'subject' header");
  return table;
}

}  // namespace edgeideals
