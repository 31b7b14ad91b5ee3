#include "edgeideals/simplicial_complex.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "edgeideals/errors.hpp"
#include "edgeideals/graph.hpp"

namespace edgeideals {

namespace {

// Keeps the maximal sets of `sets`, sorted ascending, duplicates removed.
std::vector<VertexSet> prune_to_maximal(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> out;
  out.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i != j && subset_of(sets[i], sets[j]) && sets[i] != sets[j]) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(sets[i]);
  }
  return out;
}

}  // namespace

long long FVector::total() const {
  long long t = 0;
  for (long long c : counts) t += c;
  return t;
}

SimplicialComplex SimplicialComplex::void_complex(VertexSet ground) {
  SimplicialComplex c;
  c.ground_ = ground;
  return c;
}

SimplicialComplex SimplicialComplex::irrelevant_complex(VertexSet ground) {
  SimplicialComplex c;
  c.ground_ = ground;
  c.facets_ = {0u};
  return c;
}

SimplicialComplex SimplicialComplex::simplex(VertexSet ground) {
  SimplicialComplex c;
  c.ground_ = ground;
  c.facets_ = {ground};
  return c;
}

SimplicialComplex SimplicialComplex::from_facets(VertexSet ground,
                                                 std::vector<VertexSet> facets) {
  std::sort(facets.begin(), facets.end());
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (!subset_of(facets[i], ground))
      throw InputError("complex: facet " + set_to_string(facets[i]) + " not in ground set");
    if (i > 0 && facets[i] == facets[i - 1]) throw InputError("complex: duplicate facet");
  }
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j = 0; j < facets.size(); ++j)
      if (i != j && subset_of(facets[i], facets[j]))
        throw InputError("complex: facets are not an antichain");
  SimplicialComplex c;
  c.ground_ = ground;
  c.facets_ = std::move(facets);
  return c;
}

SimplicialComplex SimplicialComplex::generated_by(VertexSet ground,
                                                  const std::vector<VertexSet>& faces) {
  for (VertexSet f : faces)
    if (!subset_of(f, ground))
      throw InputError("complex: face " + set_to_string(f) + " not in ground set");
  SimplicialComplex c;
  c.ground_ = ground;
  c.facets_ = prune_to_maximal(faces);
  return c;
}

VertexSet SimplicialComplex::support() const {
  VertexSet s = 0;
  for (VertexSet f : facets_) s |= f;
  return s;
}

bool SimplicialComplex::is_face(VertexSet f) const {
  for (VertexSet t : facets_)
    if (subset_of(f, t)) return true;
  return false;
}

int SimplicialComplex::dimension() const {
  if (is_void()) return kVoidDimension;
  int best = -1;
  for (VertexSet f : facets_) best = std::max(best, set_size(f) - 1);
  return best;
}

bool SimplicialComplex::is_pure() const {
  if (facets_.size() <= 1) return true;
  int card = set_size(facets_[0]);
  for (VertexSet f : facets_)
    if (set_size(f) != card) return false;
  return true;
}

SimplicialComplex SimplicialComplex::link(VertexSet f) const {
  if (!is_face(f)) throw InputError("link: " + set_to_string(f) + " is not a face");
  // Facets of the link are T \ F for facets T containing F; those form an
  // antichain automatically.
  std::vector<VertexSet> out;
  for (VertexSet t : facets_)
    if (subset_of(f, t)) out.push_back(t & ~f);
  std::sort(out.begin(), out.end());
  SimplicialComplex c;
  c.ground_ = ground_ & ~f;
  c.facets_ = std::move(out);
  return c;
}

SimplicialComplex SimplicialComplex::deletion(VertexSet f) const {
  std::vector<VertexSet> out;
  out.reserve(facets_.size());
  for (VertexSet t : facets_) out.push_back(t & ~f);
  SimplicialComplex c;
  c.ground_ = ground_ & ~f;
  c.facets_ = prune_to_maximal(std::move(out));
  return c;
}

SimplicialComplex SimplicialComplex::restriction(VertexSet w) const {
  if (!subset_of(w, ground_)) throw InputError("restriction: set not inside the ground set");
  std::vector<VertexSet> out;
  out.reserve(facets_.size());
  for (VertexSet t : facets_) out.push_back(t & w);
  SimplicialComplex c;
  c.ground_ = w;
  c.facets_ = prune_to_maximal(std::move(out));
  return c;
}

SimplicialComplex SimplicialComplex::pure_skeleton(int d) const {
  if (d < -1 || d > dimension())
    throw InputError("pure_skeleton: dimension " + std::to_string(d) + " out of range");
  int size = d + 1;
  std::vector<VertexSet> faces;
  for (VertexSet t : facets_) {
    // All subsets of t with `size` elements.
    std::vector<int> verts = set_to_vector(t);
    if (static_cast<int>(verts.size()) < size) continue;
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      VertexSet f = 0;
      for (int i : idx) f |= single(verts[static_cast<std::size_t>(i)]);
      faces.push_back(f);
      int k = size - 1;
      while (k >= 0 &&
             idx[static_cast<std::size_t>(k)] == static_cast<int>(verts.size()) - size + k)
        --k;
      if (k < 0) break;
      idx[static_cast<std::size_t>(k)] += 1;
      for (int i = k + 1; i < size; ++i)
        idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  SimplicialComplex c;
  c.ground_ = ground_;
  c.facets_ = std::move(faces);  // equal cardinalities: already an antichain
  return c;
}

std::vector<VertexSet> SimplicialComplex::all_faces() const {
  std::vector<VertexSet> faces;
  for (VertexSet t : facets_) {
    // Enumerate subsets of t, including ∅ and t itself.
    VertexSet sub = t;
    while (true) {
      faces.push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & t;
    }
  }
  std::sort(faces.begin(), faces.end(), [](VertexSet a, VertexSet b) {
    int ca = set_size(a), cb = set_size(b);
    return ca != cb ? ca < cb : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return faces;
}

FVector SimplicialComplex::f_vector() const {
  FVector fv;
  if (is_void()) return fv;
  fv.counts.assign(static_cast<std::size_t>(dimension() + 2), 0);
  for (VertexSet f : all_faces()) fv.counts[static_cast<std::size_t>(set_size(f))] += 1;
  return fv;
}

long long SimplicialComplex::face_count() const { return f_vector().total(); }

namespace {

// Maximal independent sets via Bron-Kerbosch with pivoting on the graph
// itself (independent sets are cliques of the complement).
void max_independent_sets(const Graph& g, VertexSet current, VertexSet candidates,
                          VertexSet excluded, std::vector<VertexSet>& out) {
  if (candidates == 0 && excluded == 0) {
    out.push_back(current);
    return;
  }
  // Pivot: vertex of the union with the fewest candidate non-neighbors.
  VertexSet both = candidates | excluded;
  int pivot = -1, best = -1;
  for (VertexSet m = both; m != 0; m &= m - 1) {
    int u = lowest_vertex(m);
    int cnt = set_size(candidates & ~g.neighbors(u) & ~single(u));
    if (best < 0 || cnt < best) {
      best = cnt;
      pivot = u;
    }
  }
  VertexSet branch = candidates & (g.neighbors(pivot) | single(pivot));
  for (VertexSet m = branch; m != 0; m &= m - 1) {
    int v = lowest_vertex(m);
    VertexSet nonadj = ~g.neighbors(v) & ~single(v);
    max_independent_sets(g, current | single(v), candidates & nonadj, excluded & nonadj, out);
    candidates &= ~single(v);
    excluded |= single(v);
  }
}

}  // namespace

SimplicialComplex independence_complex(const Graph& g) {
  if (g.vertex_count() == 0) return SimplicialComplex::irrelevant_complex(0);
  std::vector<VertexSet> facets;
  max_independent_sets(g, 0, g.vertex_set(), 0, facets);
  return SimplicialComplex::from_facets(g.vertex_set(), std::move(facets));
}

SimplicialComplex read_facet_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int ground_size = 0;
  std::vector<VertexSet> facets;
  auto fail = [&](const std::string& msg) {
    throw InputError("facet list, line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string kind;
    ss >> kind;
    if (!have_header) {
      if (kind != "g") fail("expected header 'g <ground_size>'");
      if (!(ss >> ground_size)) fail("bad ground size");
      if (ground_size < 0 || ground_size > kMaxVertices) fail("ground size out of range");
      have_header = true;
      continue;
    }
    if (kind != "f") fail("expected facet line 'f <v1> <v2> ...'");
    VertexSet f = 0;
    int v = 0, prev = -1;
    while (ss >> v) {
      if (v < 0 || v >= ground_size) fail("vertex out of range");
      if (v <= prev) fail("facet vertices must be strictly ascending");
      f |= single(v);
      prev = v;
    }
    facets.push_back(f);
  }
  if (!have_header) throw InputError("facet list: missing 'g <ground_size>' header");
  return SimplicialComplex::from_facets(full_set(ground_size), std::move(facets));
}

std::string write_facet_list(const SimplicialComplex& c) {
  // Compact the ground set to 0..k-1 (the format carries a dense ground).
  std::vector<int> ground = set_to_vector(c.ground_set());
  std::vector<int> to_new(32, -1);
  for (std::size_t i = 0; i < ground.size(); ++i)
    to_new[static_cast<std::size_t>(ground[i])] = static_cast<int>(i);
  std::string out = "g " + std::to_string(ground.size()) + "\n";
  for (VertexSet f : c.facets()) {
    out += "f";
    for (int v : set_to_vector(f)) out += " " + std::to_string(to_new[static_cast<std::size_t>(v)]);
    out += "\n";
  }
  return out;
}

std::string compact_facet_key(const SimplicialComplex& c) {
  std::vector<int> sup = set_to_vector(c.support());
  std::vector<int> to_new(32, 0);
  for (std::size_t i = 0; i < sup.size(); ++i)
    to_new[static_cast<std::size_t>(sup[i])] = static_cast<int>(i);
  std::string key;
  key.reserve(c.facets().size() * 4 + 1);
  key.push_back(static_cast<char>(sup.size()));
  for (VertexSet f : c.facets()) {
    VertexSet g = 0;
    for (VertexSet m = f; m != 0; m &= m - 1)
      g |= single(to_new[static_cast<std::size_t>(lowest_vertex(m))]);
    key.push_back(static_cast<char>(g & 0xff));
    key.push_back(static_cast<char>((g >> 8) & 0xff));
    key.push_back(static_cast<char>((g >> 16) & 0xff));
  }
  return key;
}

}  // namespace edgeideals
