#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "toric/catalog.hpp"
#include "toric/cohom.hpp"
#include "toric/covering.hpp"
#include "toric/layers.hpp"

using namespace toric;

namespace {

std::vector<Int> vec(std::initializer_list<long> xs) {
  return std::vector<Int>(xs.begin(), xs.end());
}

Lattice lat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(static_cast<int>(rows.size()), 5);
  int i = 0;
  for (auto& r : rows) {
    int j = 0;
    for (long x : r) m.at(i, j++) = x;
    ++i;
  }
  return Lattice(5, m);
}

}  // namespace

TEST_CASE("pullback matrix of the cyclic covering") {
  IntMatrix m = pullback_matrix(CoveringSpec{7, 1});
  CHECK(m == IntMatrix{{1, 0, 0, 0, 0},
                       {0, 1, 0, 0, 0},
                       {0, 0, 1, 0, 0},
                       {0, 0, 0, 1, 1},
                       {0, 0, 0, 0, 7}});
  CHECK(det(m) == 7);
  CHECK(det(pullback_matrix(CoveringSpec{7, 2})) == 7);
  CHECK(pullback_matrix(CoveringSpec{7, 2}).at(3, 4) == 2);
  // Degree-one covering: the identity.
  IntMatrix id(5, 5);
  for (int i = 0; i < 5; ++i) id.at(i, i) = 1;
  CHECK(pullback_matrix(CoveringSpec{1, 0}) == id);
  CHECK_THROWS_AS(pullback_matrix(CoveringSpec{4, 2}), std::invalid_argument);
  CHECK_THROWS_AS(pullback_matrix(CoveringSpec{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(pullback_matrix(CoveringSpec{3, 2}), std::invalid_argument);  // a+1
}

TEST_CASE("pullback respects the character relation") {
  // psi1 + psi2 - psi3 = 0 in the base; the image of psi3's character is
  // the sum of the images: alpha + (n beta + a alpha) = n beta + (a+1) alpha.
  for (long a : {1L, 2L}) {
    IntMatrix m = pullback_matrix(CoveringSpec{7, a});
    std::vector<Int> psi3(5);
    for (int i = 0; i < 5; ++i) psi3[i] = m.at(i, 3) + m.at(i, 4);
    CHECK(psi3 == vec({0, 0, 0, a + 1, 7}));
  }
}

TEST_CASE("pulled-back resonance lattices match the closed form") {
  for (long n : {7L, 11L}) {
    for (long a : {1L, 2L}) {
      H1Lattice h = build_h1_lattice(CoveringSpec{n, a});
      REQUIRE(h.q.size() == 5);
      CHECK(h.q[0] == lat({{1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}}));
      CHECK(h.q[1] == lat({{0, 1, 0, 0, 0}, {0, 0, 0, a, n}}));
      CHECK(h.q[2] == lat({{0, 0, 1, 0, 0}, {0, 0, 0, a + 1, n}}));
      CHECK(h.q[3] == lat({{1, 0, -1, 0, 0}, {-1, 1, 0, 1, 0}}));
      CHECK(h.q[4] == lat({{0, 1, -1, 0, 0}, {1, -1, 0, a, n}}));
      for (const Lattice& q : h.q) CHECK(q.rank() == 2);
    }
  }
}

TEST_CASE("torsion counts of pairs of components") {
  for (long a : {1L, 2L}) {
    H1Lattice h = build_h1_lattice(CoveringSpec{7, a});
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) {
        bool big = (j <= 3) || (i == 4 && j == 5);
        CHECK(c_value(h, i, j) == (big ? 7 : 1));
        CHECK(c_value(h, j, i) == c_value(h, i, j));
      }
  }
  H1Lattice h = build_h1_lattice(CoveringSpec{7, 1});
  CHECK_THROWS_AS(c_value(h, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(c_value(h, 0, 1), std::invalid_argument);
}

TEST_CASE("radical of a sublattice") {
  Lattice z2 = Lattice::full(2);
  IntMatrix two{{2, 0}, {0, 2}};
  CHECK(radical(Lattice(2, two), z2) == z2);
  CHECK(radical(z2, z2) == z2);
  H1Lattice h = build_h1_lattice(CoveringSpec{7, 1});
  CHECK(torus_lattice(h) == lat({{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
  CHECK(radical(torus_lattice(h), h.lattice) == torus_lattice(h));  // idempotent
}

TEST_CASE("torus lines and the sign-sum obstruction") {
  H1Lattice h1 = build_h1_lattice(CoveringSpec{7, 1});
  H1Lattice h2 = build_h1_lattice(CoveringSpec{7, 2});
  std::vector<std::vector<Int>> l1 = torus_line_generators(h1);
  std::vector<std::vector<Int>> l2 = torus_line_generators(h2);
  CHECK(l1 == std::vector<std::vector<Int>>{vec({0, 0, 0, 1, 0}), vec({0, 0, 0, 1, 7}),
                                            vec({0, 0, 0, 2, 7})});
  CHECK(l2 == std::vector<std::vector<Int>>{vec({0, 0, 0, 1, 0}), vec({0, 0, 0, 2, 7}),
                                            vec({0, 0, 0, 3, 7})});
  CHECK_THROWS_AS(torus_line_generators(h1, {4}), std::invalid_argument);

  Lattice torus = lat({{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
  CHECK(pair_sum_in_nL(l1, 7, torus));        // -alpha + (7 beta + alpha) = 7 beta
  CHECK_FALSE(pair_sum_in_nL(l2, 7, torus));
  // At n = 5 the obstruction degenerates: (5b+2a) + (5b+3a) = 5(a+2b).
  H1Lattice g2 = build_h1_lattice(CoveringSpec{5, 2});
  CHECK(pair_sum_in_nL(torus_line_generators(g2), 5, torus));
}

TEST_CASE("non-isomorphism pipeline") {
  for (long n : {7L, 11L, 13L}) {
    ObstructionReport rep = verify_non_isomorphism(n);
    CHECK(rep.hypotheses_met);
    CHECK(rep.c_patterns_match);
    CHECK(rep.radical_recovers_torus);
    CHECK(rep.pair_sum_a1);
    CHECK_FALSE(rep.pair_sum_a2);
    CHECK(rep.obstruction);
    CHECK(rep.verdict == "non-isomorphic integral cohomology");
  }
  ObstructionReport rep5 = verify_non_isomorphism(5);
  CHECK_FALSE(rep5.hypotheses_met);
  CHECK_FALSE(rep5.obstruction);  // both sums land in 5L
  CHECK(rep5.verdict == "verdict withheld: requires n > 5 with gcd(n, 6) = 1");
}

TEST_CASE("isomorphic posets of layers across the pair") {
  // The other half of the story: for n = 7 the two arrangements have the
  // same poset of layers (3 hypertori through 7 common points).
  LayerPoset p1 = enumerate_layers(matrix_A_na(7, 1));
  LayerPoset p2 = enumerate_layers(matrix_A_na(7, 2));
  CHECK(poset_isomorphism(p1, p2).has_value());
}
