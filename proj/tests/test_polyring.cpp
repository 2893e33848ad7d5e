#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toric/groebner.hpp"
#include "toric/poly.hpp"

using namespace toric;

TEST_CASE("UniPolyZ arithmetic and printing") {
  UniPolyZ p{1, 7, 41, 110};  // ascending
  CHECK(p.degree() == 3);
  CHECK(p.to_string() == "110t^3 + 41t^2 + 7t + 1");
  CHECK(p.evaluate(1) == 159);
  CHECK((UniPolyZ{1, 1} * UniPolyZ{1, -1}) == UniPolyZ{1, 0, -1});
  CHECK(UniPolyZ{1, 1}.pow(2) == UniPolyZ{1, 2, 1});
  CHECK(UniPolyZ{}.to_string() == "0");
  CHECK((UniPolyZ{1, 2} - UniPolyZ{1, 2}).is_zero());
}

TEST_CASE("BivariatePolyZ arithmetic and printing") {
  BivariatePolyZ t;  // x^2 + x + y
  t.add_term(2, 0, 1);
  t.add_term(1, 0, 1);
  t.add_term(0, 1, 1);
  CHECK(t.to_string() == "x^2 + x + y");
  CHECK(t.evaluate(2, 3) == 9);
  BivariatePolyZ u = t - t;
  CHECK(u.to_string() == "0");
  CHECK(t.at_y_zero() == UniPolyZ{0, 1, 1});

  BivariatePolyZ big;  // x^3 + x^2 + 25x + 25y + 48
  big.add_term(3, 0, 1);
  big.add_term(2, 0, 1);
  big.add_term(1, 0, 25);
  big.add_term(0, 1, 25);
  big.add_term(0, 0, 48);
  CHECK(big.to_string() == "x^3 + x^2 + 25x + 25y + 48");
}

TEST_CASE("poincare_from_tutte: hand-expanded substitutions") {
  // rank-2 essential, T = x^2 + x + y
  BivariatePolyZ t;
  t.add_term(2, 0, 1);
  t.add_term(1, 0, 1);
  t.add_term(0, 1, 1);
  CHECK(poincare_from_tutte(t, 2, 2) == UniPolyZ{1, 5, 6});

  // T = x^2 + x + 7y + 12
  BivariatePolyZ t7;
  t7.add_term(2, 0, 1);
  t7.add_term(1, 0, 1);
  t7.add_term(0, 1, 7);
  t7.add_term(0, 0, 12);
  CHECK(poincare_from_tutte(t7, 2, 2) == UniPolyZ{1, 5, 18});

  // T = x^3 + x^2 + 25x + 25y + 48
  BivariatePolyZ t3;
  t3.add_term(3, 0, 1);
  t3.add_term(2, 0, 1);
  t3.add_term(1, 0, 25);
  t3.add_term(0, 1, 25);
  t3.add_term(0, 0, 48);
  CHECK(poincare_from_tutte(t3, 3, 3) == UniPolyZ{1, 7, 41, 110});

  // T = x^3 + x^2 + x + y
  BivariatePolyZ tu;
  tu.add_term(3, 0, 1);
  tu.add_term(2, 0, 1);
  tu.add_term(1, 0, 1);
  tu.add_term(0, 1, 1);
  CHECK(poincare_from_tutte(tu, 3, 3) == UniPolyZ{1, 7, 17, 14});

  // non-essential: a single primitive column in a 2-torus, T = x
  BivariatePolyZ one;
  one.add_term(1, 0, 1);
  CHECK(poincare_from_tutte(one, 2, 1) == UniPolyZ{1, 3, 2});
}

namespace {
MultiPoly from_coeffs(int nvars, MonoOrder ord,
                      std::initializer_list<std::pair<Mono, long>> terms) {
  MultiPoly p(nvars, ord);
  for (const auto& [m, c] : terms) p.add_term(m, c);
  return p;
}
}  // namespace

TEST_CASE("monomial orders") {
  // grevlex on 3 vars: x > y > z on degree 1; x*z < y^2
  Mono x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1}, xz{1, 0, 1}, yy{0, 2, 0};
  CHECK(mono_less(y, x, MonoOrder::grevlex));
  CHECK(mono_less(z, y, MonoOrder::grevlex));
  CHECK(mono_less(xz, yy, MonoOrder::grevlex));
  CHECK(mono_less(yy, xz, MonoOrder::lex));
  CHECK(mono_less(xz, yy, MonoOrder::lex) == false);
  CHECK(mono_less(yy, Mono{1, 1, 0}, MonoOrder::lex));
  CHECK(mono_divides(x, xz));
  CHECK(mono_quot(xz, x) == z);
  CHECK(mono_lcm(xz, yy) == Mono{1, 2, 1});
}

TEST_CASE("normal_form and linear elimination") {
  // {x - z, x^2 + y^2 + z^2} reduces to {x - z, y^2 + 2z^2}
  auto xmz = from_coeffs(3, MonoOrder::grevlex, {{{1, 0, 0}, 1}, {{0, 0, 1}, -1}});
  auto quad = from_coeffs(3, MonoOrder::grevlex,
                          {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}});
  auto gb = groebner_basis({xmz, quad});
  REQUIRE(gb.size() == 2);
  auto nf = normal_form(quad, gb);
  CHECK(nf.is_zero());
  // two points in P^2
  auto inv = projective_dim_degree(gb, 3);
  CHECK(inv.dimension == 0);
  CHECK(inv.degree == 2);
}

TEST_CASE("groebner: twisted cubic") {
  // vars x, y, z, w; ideal (xz - y^2, yw - z^2, xw - yz): curve of degree 3
  auto f1 = from_coeffs(4, MonoOrder::grevlex, {{{1, 0, 1, 0}, 1}, {{0, 2, 0, 0}, -1}});
  auto f2 = from_coeffs(4, MonoOrder::grevlex, {{{0, 1, 0, 1}, 1}, {{0, 0, 2, 0}, -1}});
  auto f3 = from_coeffs(4, MonoOrder::grevlex, {{{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, -1}});
  auto gb = groebner_basis({f1, f2, f3});
  CHECK(hilbert_function(gb, 1) == 4);
  CHECK(hilbert_function(gb, 2) == 7);
  CHECK(hilbert_function(gb, 3) == 10);
  auto inv = projective_dim_degree(gb, 4);
  CHECK(inv.dimension == 1);
  CHECK(inv.degree == 3);
  // the parametrization point (1, 2, 4, 8) = (1, t, t^2, t^3) at t = 2
  CHECK(contains_point(gb, {Rat(1), Rat(2), Rat(4), Rat(8)}));
  CHECK(!contains_point(gb, {Rat(1), Rat(2), Rat(4), Rat(9)}));
}

TEST_CASE("groebner: pfaffian quadric cuts out Gr(2,4)") {
  auto j = grassmann_pfaffian_ideal(4, MonoOrder::grevlex);
  REQUIRE(j.size() == 1);
  auto gb = groebner_basis(j);
  auto inv = projective_dim_degree(gb, 6);
  CHECK(inv.dimension == 4);
  CHECK(inv.degree == 2);
  // wedge of (1,0,0,0) and (0,1,0,0): x_01 = 1, rest 0
  CHECK(contains_point(j, {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)}));
  // non-decomposable symplectic form e0^e1 + e2^e3
  CHECK(!contains_point(j, {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}));
  CHECK(grassmann_pfaffian_ideal(5, MonoOrder::grevlex).size() == 5);
  CHECK(grassmann_pfaffian_ideal(3, MonoOrder::grevlex).empty());
}

TEST_CASE("groebner: unit ideal and empty scheme") {
  auto c = MultiPoly::constant(2, 3, MonoOrder::grevlex);
  auto gb = groebner_basis({c});
  REQUIRE(gb.size() == 1);
  CHECK(gb[0].total_degree() == 0);

  // (x, y) in two variables: empty projective scheme
  auto x = MultiPoly::variable(2, 0, MonoOrder::grevlex);
  auto y = MultiPoly::variable(2, 1, MonoOrder::grevlex);
  auto inv = projective_dim_degree(groebner_basis({x, y}), 2);
  CHECK(inv.dimension == -1);
  CHECK(inv.degree == 0);
}

TEST_CASE("linear_ideal_of_subspace") {
  // span of (1,1,0) and (0,0,1) in Q^3: vanishing forms = multiples of x - y
  std::vector<std::vector<Rat>> span = {{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
  auto forms = linear_ideal_of_subspace(span, 3, MonoOrder::grevlex);
  REQUIRE(forms.size() == 1);
  CHECK(forms[0].evaluate({Rat(1), Rat(1), Rat(5)}) == 0);
  CHECK(forms[0].evaluate({Rat(1), Rat(2), Rat(0)}) != 0);
}
