#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "toric/catalog.hpp"
#include "toric/cohom.hpp"
#include "toric/groebner.hpp"
#include "toric/lattice.hpp"
#include "toric/resonance.hpp"

using namespace toric;

namespace {

std::vector<Rat> rat_row(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.push_back(Rat(x));
  return out;
}

Plane plane(std::initializer_list<long> u, std::initializer_list<long> v) {
  return make_plane(rat_row(u), rat_row(v));
}

bool sets_equal(std::vector<Plane> a, std::vector<Plane> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

TEST_CASE("Pluecker round trip on random planes") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int k = 4; k <= 6; ++k) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rat> u(k), v(k);
      for (int i = 0; i < k; ++i) {
        u[i] = Rat(entry(rng));
        v[i] = Rat(entry(rng));
      }
      Plane p;
      try {
        p = make_plane(u, v);
      } catch (const std::invalid_argument&) {
        --trial;  // resample dependent pairs
        continue;
      }
      CHECK(plane_from_plucker(plucker_coordinates(p), k) == p);
    }
  }
}

TEST_CASE("non-decomposable Pluecker vectors are rejected") {
  // e12 + e34 in dimension 4 fails the single Pfaffian quadric.
  std::vector<Rat> w = rat_row({1, 0, 0, 0, 0, 1});
  CHECK_THROWS_AS(plane_from_plucker(w, 4), std::invalid_argument);
  CHECK_THROWS_AS(plane_from_plucker(rat_row({0, 0, 0, 0, 0, 0}), 4),
                  std::invalid_argument);
}

TEST_CASE("wedge kernel of the rank-2 arrangement") {
  GradedAlgebraQ alg = build_unimodular_presentation(matrix_A());
  WedgeKernel k = wedge_kernel(alg, matrix_A());
  CHECK(k.dim == 4);

  // Linear forms cutting out the kernel inside the 10 pair coordinates
  // x12 .. x45 of the basis (w1, w2, w3, psi1, psi2).
  std::vector<MultiPoly> lin = linear_ideal_of_subspace(k.basis, 10, MonoOrder::grevlex);
  CHECK(lin.size() == 6);
  auto form = [](std::initializer_list<long> coeffs) {
    MultiPoly f(10, MonoOrder::grevlex);
    int i = 0;
    for (long c : coeffs) {
      Mono m(10, 0);
      m[i] = 1;
      if (c != 0) f.add_term(m, Rat(c));
      ++i;
    }
    return f;
  };
  //         x12 x13 x14 x15 x23 x24 x25 x34 x35 x45
  std::vector<MultiPoly> expected = {
      form({0, 0, 0, 1, 0, 0, 0, 0, 0, 0}),    // x15
      form({0, 0, 0, 0, 0, 1, 0, 0, 0, 0}),    // x24
      form({0, 0, 0, 0, 0, 0, 0, 0, 0, 1}),    // x45
      form({1, 1, 0, 0, 0, 0, 0, 0, 0, 0}),    // x12 + x13
      form({0, 1, 0, 0, 1, 0, 0, 0, 0, 0}),    // x13 + x23
      form({0, 1, 0, 0, 0, 0, 0, -1, 1, 0}),   // x13 - x34 + x35
  };
  // Same linear span in both directions (reduce against echelonized sets).
  std::vector<MultiPoly> lin_gb = groebner_basis(lin);
  std::vector<MultiPoly> exp_gb = groebner_basis(expected);
  for (const MultiPoly& f : expected) CHECK(normal_form(f, lin_gb).is_zero());
  for (const MultiPoly& f : lin) CHECK(normal_form(f, exp_gb).is_zero());
}

TEST_CASE("resonance scheme of the rank-2 arrangement") {
  GradedAlgebraQ alg = build_unimodular_presentation(matrix_A());
  WedgeKernel k = wedge_kernel(alg, matrix_A());
  std::vector<MultiPoly> gens = linear_ideal_of_subspace(k.basis, 10, MonoOrder::grevlex);
  for (MultiPoly& q : grassmann_pfaffian_ideal(5, MonoOrder::grevlex))
    gens.push_back(std::move(q));
  ProjectiveInvariants inv = projective_dim_degree(groebner_basis(gens), 10);
  CHECK(inv.dimension == 0);
  CHECK(inv.degree == 5);
}

TEST_CASE("resonance components of the rank-2 arrangement") {
  GradedAlgebraQ alg = build_unimodular_presentation(matrix_A());
  std::vector<Plane> comps = resonance_components(alg, matrix_A());
  REQUIRE(comps.size() == 5);

  // Basis (w1, w2, w3, psi1, psi2): the three local planes and the two
  // planes through w1 - w3.
  std::vector<Plane> expected = {
      plane({1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}),
      plane({0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}),
      plane({0, 0, 1, 0, 0}, {0, 0, 0, 1, 1}),
      plane({1, 0, -1, 0, 0}, {1, -1, 0, -1, 0}),
      plane({1, 0, -1, 0, 1}, {0, 1, -1, 0, 0}),
  };
  CHECK(sets_equal(comps, expected));

  // The published Pluecker coordinates of the five points, pair order
  // x12 < x13 < ... < x45.
  std::vector<std::vector<Rat>> pts;
  for (const Plane& p : comps) pts.push_back(plucker_coordinates(p));
  std::sort(pts.begin(), pts.end());
  std::vector<std::vector<Rat>> want = {
      rat_row({0, 0, 1, 0, 0, 0, 0, 0, 0, 0}),
      rat_row({0, 0, 0, 0, 0, 0, 1, 0, 0, 0}),
      rat_row({0, 0, 0, 0, 0, 0, 0, 1, 1, 0}),
      rat_row({1, -1, 1, 0, 1, 0, 0, -1, 0, 0}),
      rat_row({1, -1, 0, 0, 1, 0, -1, 0, 1, 0}),
  };
  std::sort(want.begin(), want.end());
  CHECK(pts == want);
}

TEST_CASE("membership in R^1 for the rank-2 arrangement") {
  GradedAlgebraQ alg = build_unimodular_presentation(matrix_A());
  std::vector<CohomElement> b = h1_standard_basis(alg, matrix_A());
  CHECK(in_r1(alg, b[0]));               // w1 kills psi1
  CHECK(in_r1(alg, b[3]));               // psi1 kills w1
  CHECK(in_r1(alg, b[0] - b[2]));        // lies on two components
  CHECK(delta_kernel_dim(alg, b[0] - b[2]) == 2);
  CHECK(in_r1(alg, b[3] + b[4]));        // psi1 + psi2 is the third character
  CHECK_FALSE(in_r1(alg, b[0] + b[1]));  // on no component
  CHECK_FALSE(in_r1(alg, b[3] - b[4]));
  CHECK(in_r1(alg, CohomElement{}));     // zero class by convention
  CHECK(delta_kernel_dim(alg, b[0]) == 2);
}

TEST_CASE("resonance components of the rank-3 pair") {
  // Chart order: w1..w4, then the torus coordinates a, b, c.
  GradedAlgebraQ algn = build_rational_presentation(matrix_N());
  std::vector<Plane> qn = resonance_components(algn, matrix_N());
  REQUIRE(qn.size() == 4);
  std::vector<Plane> expect_n = {
      plane({1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0}),
      plane({0, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 5, 0}),
      plane({0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 5}),
      plane({0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 3, 5, 5}),
  };
  CHECK(sets_equal(qn, expect_n));

  GradedAlgebraQ algp = build_rational_presentation(matrix_Nprime());
  std::vector<Plane> qp = resonance_components(algp, matrix_Nprime());
  REQUIRE(qp.size() == 4);
  std::vector<Plane> expect_p = {
      plane({1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0}),
      plane({0, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 4, 5, 0}),
      plane({0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 5}),
      plane({0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 6, 5, 5}),
  };
  CHECK(sets_equal(qp, expect_p));

  CHECK(wedge_kernel(algn, matrix_N()).dim == 4);
  CHECK(wedge_kernel(algp, matrix_Nprime()).dim == 4);

  // Each local component pairs a hypertorus class with its character.
  std::vector<CohomElement> b = h1_standard_basis(algn, matrix_N());
  for (int i = 0; i < 4; ++i) CHECK(in_r1(algn, b[i]));
  CHECK_FALSE(in_r1(algn, b[4] + b[5]));
}

TEST_CASE("resonance lattices against the integral chart") {
  GradedAlgebraQ alg = build_rational_presentation(matrix_N());
  std::vector<Plane> comps = resonance_components(alg, matrix_N());
  std::vector<Lattice> lats = resonance_lattices(comps, Lattice::full(7));
  REQUIRE(lats.size() == 4);
  for (size_t i = 0; i < lats.size(); ++i) {
    CHECK(lats[i].rank() == 2);
    // Saturated: the primitive integral spans of the planes themselves.
    IntMatrix num(2, 7);
    for (int r = 0; r < 2; ++r) {
      Int lcm = 1;
      for (int c = 0; c < 7; ++c) {
        Int den = comps[i].basis.at(r, c).get_den();
        lcm = lcm / gcd(lcm, den) * den;
      }
      for (int c = 0; c < 7; ++c)
        num.at(r, c) = Rat(comps[i].basis.at(r, c) * Rat(lcm)).get_num();
    }
    CHECK(lats[i] == saturation(Lattice(7, num)));
  }
}
