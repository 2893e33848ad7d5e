// Integer polynomials in one and two variables.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toric/int_matrix.hpp"

namespace toric {

/// Z[t], coefficients stored by ascending degree.
class UniPolyZ {
 public:
  UniPolyZ() = default;
  UniPolyZ(std::initializer_list<long> ascending);
  static UniPolyZ monomial(const Int& c, int deg);

  int degree() const;  // -1 for the zero polynomial
  Int coeff(int deg) const;
  bool is_zero() const { return degree() < 0; }

  UniPolyZ operator+(const UniPolyZ& o) const;
  UniPolyZ operator-(const UniPolyZ& o) const;
  UniPolyZ operator*(const UniPolyZ& o) const;
  bool operator==(const UniPolyZ& o) const;

  Int evaluate(const Int& t) const;
  UniPolyZ pow(int e) const;

  /// "110t^3 + 41t^2 + 7t + 1" (descending); "0" for zero.
  std::string to_string(const std::string& var = "t") const;

  std::vector<Int> coefficients() const { return c_; }  // ascending, trimmed

 private:
  void trim();
  std::vector<Int> c_;
};

/// Z[x, y], sparse on (deg_x, deg_y).
class BivariatePolyZ {
 public:
  BivariatePolyZ() = default;

  void add_term(int dx, int dy, const Int& c);
  Int coeff(int dx, int dy) const;

  BivariatePolyZ operator+(const BivariatePolyZ& o) const;
  BivariatePolyZ operator-(const BivariatePolyZ& o) const;
  BivariatePolyZ operator*(const BivariatePolyZ& o) const;
  bool operator==(const BivariatePolyZ& o) const { return t_ == o.t_; }

  Int evaluate(const Int& x, const Int& y) const;

  /// Coefficients of y^0, i.e. the univariate polynomial p(x) = f(x, 0).
  UniPolyZ at_y_zero() const;

  const std::map<std::pair<int, int>, Int>& terms() const { return t_; }

  /// "x^3 + x^2 + 25x + 25y + 48": x-degree major, then y-degree, descending.
  std::string to_string() const;

 private:
  std::map<std::pair<int, int>, Int> t_;
};

/// Poincare polynomial of the arrangement complement from its arithmetic
/// Tutte polynomial: (1+t)^(r-rk) * t^rk * T((2t+1)/t, 0), where r is the
/// ambient torus dimension and rk the rank of the defining matrix.  The
/// result is a genuine polynomial since deg_x T <= rk.
UniPolyZ poincare_from_tutte(const BivariatePolyZ& tutte, int r, int rk);

}  // namespace toric
