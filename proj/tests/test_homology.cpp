#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "edgeideals/errors.hpp"
#include "edgeideals/exact_linalg.hpp"
#include "edgeideals/families.hpp"
#include "edgeideals/homology.hpp"
#include "edgeideals/ideals.hpp"
#include "support.hpp"

using namespace edgeideals;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kGF2 = FieldSpec::prime_field(2);

}  // namespace

TEST_CASE("exact rank on constructed matrices") {
  // rank(A*B) with A of shape (m,r) and B of shape (r,n), generic small
  // entries: rank is r by construction.
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    int m = 2 + static_cast<int>(rng() % 6);
    int n = 2 + static_cast<int>(rng() % 6);
    int r = 1 + static_cast<int>(rng() % std::min(m, n));
    // A = [I; A2] and B = [I B2]: both factors have rank exactly r and the
    // product keeps an identity minor, so rank(A*B) = r over every field.
    IntMatrix a(m, r), b(r, n), prod(m, n);
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < r; ++k) a.at(i, k) = (i < r) ? (i == k ? 1 : 0) : entry(rng);
    for (int k = 0; k < r; ++k)
      for (int j = 0; j < n; ++j) b.at(k, j) = (j < r) ? (j == k ? 1 : 0) : entry(rng);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        long long s = 0;
        for (int k = 0; k < r; ++k) s += a.at(i, k) * b.at(k, j);
        prod.at(i, j) = s;
      }
    CHECK(rank_over_rationals(prod) == r);
    CHECK(rank_mod_prime(prod, 2) == r);
    CHECK(rank_mod_prime(prod, 1000003) == r);
  }
  CHECK(rank_over_rationals(IntMatrix(0, 5)) == 0);
  CHECK_THROWS_AS(rank_mod_prime(IntMatrix(2, 2), 1), InputError);
}

TEST_CASE("named homology profiles") {
  // Hollow triangle: a 1-sphere.
  SimplicialComplex circle = SimplicialComplex::from_facets(
      full_set(3),
      {single(0) | single(1), single(1) | single(2), single(0) | single(2)});
  HomologyProfile p = reduced_homology(circle, kQ);
  CHECK(p.dim(-1) == 0);
  CHECK(p.dim(0) == 0);
  CHECK(p.dim(1) == 1);

  // Two isolated points.
  SimplicialComplex points = SimplicialComplex::from_facets(full_set(2), {single(0), single(1)});
  p = reduced_homology(points, kQ);
  CHECK(p.dim(-1) == 0);
  CHECK(p.dim(0) == 1);

  // A simplex is a cone, hence acyclic.
  p = reduced_homology(SimplicialComplex::simplex(full_set(3)), kQ);
  CHECK(p.all_zero());

  // Boundary of the tetrahedron: a 2-sphere.
  std::vector<VertexSet> triangles;
  for (int skip = 0; skip < 4; ++skip) triangles.push_back(full_set(4) & ~single(skip));
  p = reduced_homology(SimplicialComplex::from_facets(full_set(4), triangles), kQ);
  CHECK(p.dim(0) == 0);
  CHECK(p.dim(1) == 0);
  CHECK(p.dim(2) == 1);

  // Degenerate complexes.
  CHECK(reduced_homology(SimplicialComplex::irrelevant_complex(full_set(2)), kQ).dim(-1) == 1);
  CHECK(reduced_homology(SimplicialComplex::void_complex(full_set(2)), kQ).dims.empty());
}

TEST_CASE("reduced Euler characteristic identity on random complexes") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    SimplicialComplex c = testsupport::random_test_complex(rng, 7);
    const FieldSpec& field = (trial % 2 == 0) ? kQ : kGF2;
    HomologyProfile p = reduced_homology(c, field);
    FVector fv = c.f_vector();
    long long lhs = 0, rhs = 0;
    for (int d = -1; d <= c.dimension(); ++d) {
      long long sign = (d % 2 == 0) ? 1 : -1;  // (-1)^d with d >= -1
      lhs += sign * p.dim(d);
      rhs += sign * fv.faces_of_dim(d);
    }
    CHECK(lhs == rhs);
    for (int h : p.dims) CHECK(h >= 0);  // rank-nullity consistency
  }
}

TEST_CASE("hochster betti table of the path on three vertices") {
  // Independence complex of the path 0-1-2 has facets {1} and {0,2}.
  // Hand enumeration of every W:
  //   W = {}        -> irrelevant complex, dim H~_{-1} = 1 -> beta_{0,0}
  //   W = {0},{1},{2} -> a point, acyclic
  //   W = {0,1}     -> two points, dim H~_0 = 1 -> beta_{1,2}
  //   W = {1,2}     -> two points, dim H~_0 = 1 -> beta_{1,2}
  //   W = {0,2}     -> the edge {0,2}, acyclic
  //   W = {0,1,2}   -> edge {0,2} plus isolated 1, dim H~_0 = 1 -> beta_{2,3}
  BettiTable table = hochster_betti(edge_ideal(path_graph(3)), kQ);
  BettiTable expected;
  expected.entries[{0, 0}] = 1;
  expected.entries[{1, 2}] = 2;
  expected.entries[{2, 3}] = 1;
  CHECK(table == expected);
  CHECK(regularity(table) == 1);
  CHECK(projective_dimension(table) == 2);
}

TEST_CASE("hochster betti tables, small cases") {
  BettiTable k2 = hochster_betti(edge_ideal(path_graph(2)), kQ);
  CHECK(k2.entries == std::map<std::pair<int, int>, long long>{{{0, 0}, 1}, {{1, 2}, 1}});
  CHECK(regularity(k2) == 1);
  CHECK(projective_dimension(k2) == 1);

  CHECK(regularity(hochster_betti(edge_ideal(cycle_graph(8)), kQ)) == 3);

  // Cover ideal of a single edge is (x, y); R/(x,y) has the Koszul table.
  BettiTable koszul = hochster_betti(cover_ideal(path_graph(2)), kQ);
  CHECK(koszul.entries ==
        std::map<std::pair<int, int>, long long>{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}});
  CHECK(projective_dimension(koszul) == 2);  // so the ideal itself has pd 1

  // Zero ideal: the module is R itself.
  BettiTable free_module = hochster_betti(SquareFreeMonomialIdeal::zero(full_set(3)), kQ);
  CHECK(free_module.entries == std::map<std::pair<int, int>, long long>{{{0, 0}, 1}});

  CHECK_THROWS_AS(hochster_betti(SquareFreeMonomialIdeal::unit(full_set(2)), kQ), InputError);
  CHECK_THROWS_AS(regularity(BettiTable{}), InputError);
  CHECK_THROWS_AS(projective_dimension(BettiTable{}), InputError);
}

TEST_CASE("cohen-macaulay oracle") {
  CHECK(is_cohen_macaulay(independence_complex(path_graph(2)), kQ));
  // Facets {0,2},{1,3}: a disconnected pure 1-complex; H~_0 of the link of
  // the empty face is nonzero.
  CHECK(!is_cohen_macaulay(independence_complex(cycle_graph(4)), kQ));
  CHECK(is_cohen_macaulay(SimplicialComplex::simplex(full_set(4)), kQ));
  CHECK(is_cohen_macaulay(SimplicialComplex::irrelevant_complex(full_set(2)), kQ));
  CHECK_THROWS_AS(is_cohen_macaulay(SimplicialComplex::void_complex(0), kQ), InputError);
}

TEST_CASE("sequentially cohen-macaulay oracle") {
  // Sample of trees; the full family is covered by the acceptance suite.
  for (int n = 2; n <= 9; ++n) {
    CHECK(is_sequentially_cm(independence_complex(path_graph(n)), kQ));
    CHECK(is_sequentially_cm(independence_complex(star_graph(n)), kQ));
    CHECK(is_sequentially_cm(independence_complex(random_tree(n, 77, n)), kQ));
  }
  CHECK(!is_sequentially_cm(independence_complex(cycle_graph(4)), kQ));
  CHECK(!is_sequentially_cm(independence_complex(cycle_graph(8)), kQ));
  CHECK_THROWS_AS(is_sequentially_cm(SimplicialComplex::void_complex(0), kQ), InputError);

  // CM implies SCM on a few random complexes.
  std::mt19937 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    SimplicialComplex c = testsupport::random_test_complex(rng, 6);
    if (c.is_void()) continue;
    if (is_cohen_macaulay(c, kQ)) CHECK(is_sequentially_cm(c, kQ));
  }
}

TEST_CASE("caches do not change results") {
  AlgebraCaches caches;
  std::mt19937 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = testsupport::random_test_graph(rng, 6);
    SimplicialComplex c = independence_complex(g);
    CHECK(reduced_homology(c, kQ, &caches) == reduced_homology(c, kQ));
    CHECK(is_sequentially_cm(c, kQ, &caches) == is_sequentially_cm(c, kQ));
    CHECK(hochster_betti(edge_ideal(g), kQ, &caches) == hochster_betti(edge_ideal(g), kQ));
  }
}

TEST_CASE("betti table round trip") {
  BettiTable table = hochster_betti(edge_ideal(cycle_graph(8)), kQ);
  table.subject = "c8";
  std::string text = write_betti_table(table);
  std::istringstream in(text);
  BettiTable back = read_betti_table(in);
  CHECK(back == table);
  CHECK(back.subject == "c8");

  auto parse = [](const std::string& t) {
    std::istringstream s(t);
    return read_betti_table(s);
  };
  CHECK_THROWS_AS(parse("b 0 0 1\n"), InputError);
  CHECK_THROWS_AS(parse("subject x\nb 0 0 0\n"), InputError);
  CHECK_THROWS_AS(parse("subject x\nb 0 0 1\nb 0 0 2\n"), InputError);
}
