#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "toric/arithmat.hpp"
#include "toric/catalog.hpp"
#include "toric/cohom.hpp"
#include "toric/layers.hpp"

using namespace toric;

namespace {

CohomElement gen(const GradedAlgebraQ& a, int g) { return a.generator(g); }

std::vector<int> betti(const GradedAlgebraQ& a) { return a.graded_dimensions(); }

}  // namespace

TEST_CASE("unimodular presentation of the rank-2 arrangement") {
  GradedAlgebraQ alg = build_unimodular_presentation(matrix_A());
  CHECK(betti(alg) == std::vector<int>{1, 5, 6});

  CohomElement w1 = gen(alg, alg.omega_index(0));
  CohomElement w2 = gen(alg, alg.omega_index(1));
  CohomElement w3 = gen(alg, alg.omega_index(2));
  CohomElement p1 = gen(alg, alg.psi_index(0));
  CohomElement p2 = gen(alg, alg.psi_index(1));

  // The four degree-2 identities of the two-dimensional example.
  CHECK(alg.is_zero(alg.multiply(w1, w2) - alg.multiply(w1, w3) + alg.multiply(w2, w3) -
                    alg.multiply(w3, p1)));
  CHECK(alg.is_zero(alg.multiply(w1, p1)));
  CHECK(alg.is_zero(alg.multiply(w2, p2)));
  CHECK(alg.is_zero(alg.multiply(w3, p1) + alg.multiply(w3, p2)));

  // Their factored consequences.
  CHECK(alg.is_zero(alg.multiply(w1 - w3, w1 - w2 - p1)));
  CHECK(alg.is_zero(alg.multiply(w2 - w3, w1 - w2 + p2)));

  // Degree-one classes multiply onto all of degree two.
  CHECK(alg.multiplication_rank(1, 1) == 6);
}

TEST_CASE("unimodular presentation rejects non-unimodular input") {
  CHECK_THROWS_AS(build_unimodular_presentation(matrix_N()), std::invalid_argument);
  CHECK_THROWS_AS(build_unimodular_presentation(matrix_A_na(7, 1)), std::invalid_argument);
}

TEST_CASE("unimodular presentation of the rank-3 unimodular arrangement") {
  GradedAlgebraQ alg = build_unimodular_presentation(matrix_Nsecond());
  CHECK(betti(alg) == std::vector<int>{1, 7, 17, 14});
}

TEST_CASE("integral graded pieces are torsion-free with the rational ranks") {
  CHECK(integral_graded_unimodular(matrix_A(), 0) == ZModule{1, {}});
  CHECK(integral_graded_unimodular(matrix_A(), 1) == ZModule{5, {}});
  CHECK(integral_graded_unimodular(matrix_A(), 2) == ZModule{6, {}});
  CHECK(integral_graded_unimodular(matrix_Nsecond(), 3) == ZModule{14, {}});
}

TEST_CASE("rational presentation generator census for the rank-3 example") {
  GradedAlgebraQ alg = build_rational_presentation(matrix_N());
  int psi = 0;
  std::vector<int> obar_by_degree(4, 0);
  for (const GeneratorLabel& g : alg.generators()) {
    if (g.kind == GeneratorLabel::Kind::Psi) ++psi;
    if (g.kind == GeneratorLabel::Kind::OmegaBar) ++obar_by_degree[g.degree];
  }
  CHECK(psi == 4);
  CHECK(obar_by_degree[1] == 4);
  CHECK(obar_by_degree[2] == 30);
  CHECK(obar_by_degree[3] == 100);
}

TEST_CASE("rational graded dimensions of the named arrangements") {
  CHECK(betti(build_rational_presentation(matrix_A())) == std::vector<int>{1, 5, 6});
  CHECK(betti(build_rational_presentation(matrix_N())) == std::vector<int>{1, 7, 41, 110});
  CHECK(betti(build_rational_presentation(matrix_Nprime())) == std::vector<int>{1, 7, 41, 110});
  CHECK(betti(build_rational_presentation(matrix_A_na(7, 1))) == std::vector<int>{1, 5, 18});
  CHECK(betti(build_rational_presentation(matrix_A_na(7, 2))) == std::vector<int>{1, 5, 18});
}

TEST_CASE("empty arrangement gives the exterior algebra of the torus") {
  IntMatrix empty(2, 0);
  CHECK(betti(build_rational_presentation(empty)) == std::vector<int>{1, 2, 1});
}

TEST_CASE("rank-2 family: the two members agree on all rational invariants") {
  GradedAlgebraQ a1 = build_rational_presentation(matrix_A_na(7, 1));
  GradedAlgebraQ a2 = build_rational_presentation(matrix_A_na(7, 2));
  CHECK(betti(a1) == betti(a2));
  for (int p = 0; p <= 1; ++p)
    for (int q = p; p + q <= 2; ++q)
      CHECK(a1.multiplication_rank(p, q) == a2.multiplication_rank(p, q));
}

TEST_CASE("graded commutativity of the free product") {
  GradedAlgebraQ alg = build_rational_presentation(matrix_N());
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_elem = [&](int degree) {
    CohomElement e;
    e.degree = degree;
    for (const CohomMono& m : alg.monomial_basis(degree))
      if (coef(rng) > 1) e.terms.emplace(m, Rat(coef(rng)));
    return e;
  };
  for (int trial = 0; trial < 5; ++trial) {
    CohomElement x = random_elem(1), y = random_elem(1), z = random_elem(2);
    CHECK((alg.multiply(x, y) + alg.multiply(y, x)).structurally_zero());
    CHECK((alg.multiply(x, z) - alg.multiply(z, x)).structurally_zero());
    CHECK((alg.multiply(alg.multiply(x, y), z) - alg.multiply(x, alg.multiply(y, z)))
              .structurally_zero());
  }
}

TEST_CASE("torus quotient of the rank-3 example") {
  GradedAlgebraQ s = quotient_by_torus_ideal(build_rational_presentation(matrix_N()));
  CHECK(s.graded_dimension(1) == 4);

  // The alternating sum of the codimension-3 classes through a fixed
  // component vanishes in degree 3.
  const IntMatrix n = matrix_N();
  std::vector<int> full = {0, 1, 2, 3};
  std::vector<Layer> top_comps = flat_components(n, full);
  REQUIRE(top_comps.size() == 25);
  std::map<std::vector<int>, std::vector<Layer>> triples;
  for (int skip = 0; skip < 4; ++skip) {
    std::vector<int> sub;
    for (int i = 0; i < 4; ++i)
      if (i != skip) sub.push_back(i);
    triples.emplace(sub, flat_components(n, sub));
  }
  for (const Layer& b : top_comps) {
    CohomElement alt;
    alt.degree = 3;
    int sgn = -1;  // signs alternate starting with the first column removed
    for (int skip = 0; skip < 4; ++skip, sgn = -sgn) {
      std::vector<int> sub;
      for (int i = 0; i < 4; ++i)
        if (i != skip) sub.push_back(i);
      const std::vector<Layer>& comps = triples.at(sub);
      int wc = -1;
      for (int c = 0; c < static_cast<int>(comps.size()); ++c)
        if (layer_leq(comps[c], b)) wc = c;
      REQUIRE(wc >= 0);
      alt = alt + Rat(sgn) * s.generator(s.omegabar_index(sub, wc));
    }
    CHECK(s.is_zero(alt));
  }
}

TEST_CASE("product rule: degree-1 times degree-2 classes expand over fibers") {
  GradedAlgebraQ s = quotient_by_torus_ideal(build_rational_presentation(matrix_N()));
  const IntMatrix n = matrix_N();
  std::vector<int> pair = {1, 2};
  std::vector<Layer> pair_comps = flat_components(n, pair);
  std::vector<Layer> h0 = flat_components(n, {0});
  std::vector<Layer> triple_comps = flat_components(n, {0, 1, 2});
  REQUIRE(h0.size() == 1);
  for (int a = 0; a < static_cast<int>(pair_comps.size()); ++a) {
    CohomElement lhs = s.multiply(s.generator(s.omegabar_index({0}, 0)),
                                  s.generator(s.omegabar_index(pair, a)));
    CohomElement rhs;
    rhs.degree = 3;
    for (int b = 0; b < static_cast<int>(triple_comps.size()); ++b)
      if (layer_leq(pair_comps[a], triple_comps[b]))
        rhs = rhs + s.generator(s.omegabar_index({0, 1, 2}, b));
    // l({1},{2,3}) = 0 in the fixed column order, so no sign appears.
    CHECK(s.is_zero(lhs - rhs));
  }
}

namespace {

// The isomorphism LG(I) -> LG(J) commuting with the projections from the
// full component group, defined whenever the two projection kernels agree:
// a component of the I-flat maps to the unique J-flat component meeting the
// same fiber.
int transport_component(const IntMatrix& n, const std::vector<Layer>& top,
                        const std::vector<Layer>& from, int a,
                        const std::vector<Layer>& to) {
  for (const Layer& b : top) {
    if (!layer_leq(from[a], b)) continue;
    for (int c = 0; c < static_cast<int>(to.size()); ++c)
      if (layer_leq(to[c], b)) return c;
  }
  return -1;
}

}  // namespace

TEST_CASE("aggregate degree-3 relations distinguish the two rank-3 algebras") {
  const IntMatrix n = matrix_N();
  const IntMatrix np = matrix_Nprime();
  GradedAlgebraQ s = quotient_by_torus_ideal(build_rational_presentation(n));
  GradedAlgebraQ sp = quotient_by_torus_ideal(build_rational_presentation(np));

  auto signed_omegas = [](const GradedAlgebraQ& alg, const std::vector<int>& signs) {
    CohomElement e;
    e.degree = 1;
    for (int i = 0; i < 4; ++i)
      e = e + Rat(signs[i]) * alg.generator(alg.omegabar_index({i}, 0));
    return e;
  };

  // For the primed arrangement the {1,2} and {3,4} projection kernels agree,
  // so each component pairs off and the product vanishes component-wise.
  {
    std::vector<Layer> top = flat_components(np, {0, 1, 2, 3});
    std::vector<Layer> c12 = flat_components(np, {0, 1});
    std::vector<Layer> c34 = flat_components(np, {2, 3});
    CohomElement lin = signed_omegas(sp, {1, -1, 1, -1});
    for (int a = 0; a < static_cast<int>(c12.size()); ++a) {
      int fa = transport_component(np, top, c12, a, c34);
      REQUIRE(fa >= 0);
      CohomElement quad = sp.generator(sp.omegabar_index({0, 1}, a)) +
                          sp.generator(sp.omegabar_index({2, 3}, fa));
      CHECK(sp.is_zero(sp.multiply(lin, quad)));
    }
    std::vector<Layer> c14 = flat_components(np, {0, 3});
    std::vector<Layer> c23 = flat_components(np, {1, 2});
    CohomElement lin2 = signed_omegas(sp, {1, 1, -1, -1});
    for (int c = 0; c < static_cast<int>(c14.size()); ++c) {
      int fc = transport_component(np, top, c14, c, c23);
      REQUIRE(fc >= 0);
      CohomElement quad = sp.generator(sp.omegabar_index({0, 3}, c)) +
                          sp.generator(sp.omegabar_index({1, 2}, fc));
      CHECK(sp.is_zero(sp.multiply(lin2, quad)));
    }
  }

  // For the unprimed arrangement only the aggregate sums vanish; the
  // component-wise products do not.
  {
    std::vector<Layer> c12 = flat_components(n, {0, 1});
    std::vector<Layer> c34 = flat_components(n, {2, 3});
    CohomElement lin = signed_omegas(s, {1, -1, 1, -1});
    CohomElement agg;
    agg.degree = 2;
    for (int a = 0; a < static_cast<int>(c12.size()); ++a)
      agg = agg + s.generator(s.omegabar_index({0, 1}, a));
    for (int b = 0; b < static_cast<int>(c34.size()); ++b)
      agg = agg + s.generator(s.omegabar_index({2, 3}, b));
    CHECK(s.is_zero(s.multiply(lin, agg)));
    CohomElement single = s.generator(s.omegabar_index({0, 1}, 0)) +
                          s.generator(s.omegabar_index({2, 3}, 0));
    CHECK(!s.is_zero(s.multiply(lin, single)));
  }
}

TEST_CASE("multiplication ranks separate the two rank-3 algebras") {
  GradedAlgebraQ s = quotient_by_torus_ideal(build_rational_presentation(matrix_N()));
  GradedAlgebraQ sp = quotient_by_torus_ideal(build_rational_presentation(matrix_Nprime()));
  CHECK(s.multiplication_rank(1, 2) == 51);
  CHECK(sp.multiplication_rank(1, 2) == 43);
}

TEST_CASE("graded dimensions cross-check the matroid pipeline") {
  auto check = [](const IntMatrix& m) {
    UniPolyZ poin = poincare_polynomial(matroid_from_matrix(m));
    std::vector<int> dims = build_rational_presentation(m).graded_dimensions();
    for (int k = 0; k <= m.rows(); ++k) {
      CAPTURE(m.to_string());
      CAPTURE(k);
      CHECK(Int(dims[k]) == poin.coeff(k));
    }
  };
  check(matrix_A());
  check(matrix_A_na(5, 2));
  check(matrix_Nsecond());

  std::mt19937 rng(90210);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> rdist(1, 3), ndist(1, 4);
  int done = 0;
  while (done < 8) {
    IntMatrix m(rdist(rng), ndist(rng));
    bool ok = true;
    for (int j = 0; j < m.cols(); ++j) {
      bool zero = true;
      for (int i = 0; i < m.rows(); ++i) {
        m.at(i, j) = entry(rng);
        if (m.at(i, j) != 0) zero = false;
      }
      if (zero) ok = false;  // a trivial hypertorus empties the complement
    }
    if (!ok) continue;
    try {
      check(m);
    } catch (const std::length_error&) {
      continue;
    }
    ++done;
  }
}
