// Sparse multivariate polynomials over Q with selectable monomial order.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "toric/int_matrix.hpp"

namespace toric {

using Mono = std::vector<int>;  // exponent vector, fixed length = nvars

enum class MonoOrder { grevlex, lex };

int mono_deg(const Mono& m);
bool mono_divides(const Mono& a, const Mono& b);  // a | b
Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_quot(const Mono& b, const Mono& a);  // b / a, requires a | b
Mono mono_lcm(const Mono& a, const Mono& b);

/// Strict order: true if a comes before b (a smaller than b in the term order).
bool mono_less(const Mono& a, const Mono& b, MonoOrder ord);

class MultiPoly {
 public:
  MultiPoly(int nvars, MonoOrder ord) : nvars_(nvars), ord_(ord) {}
  static MultiPoly variable(int nvars, int i, MonoOrder ord);
  static MultiPoly constant(int nvars, const Rat& c, MonoOrder ord);

  int nvars() const { return nvars_; }
  MonoOrder order() const { return ord_; }
  bool is_zero() const { return t_.empty(); }

  void add_term(const Mono& m, const Rat& c);
  Rat coeff(const Mono& m) const;
  const std::map<Mono, Rat>& terms() const { return t_; }

  Mono leading_mono() const;  // largest in the term order; poly must be nonzero
  Rat leading_coeff() const;
  int total_degree() const;  // -1 for zero

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Rat& c) const;
  MultiPoly times_mono(const Mono& m, const Rat& c) const;
  bool operator==(const MultiPoly& o) const { return t_ == o.t_; }

  /// Leading coefficient scaled to 1 (zero stays zero).
  MultiPoly monic() const;

  Rat evaluate(const std::vector<Rat>& point) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  MonoOrder ord_;
  std::map<Mono, Rat> t_;  // plain lex map; term-order scans are explicit
};

}  // namespace toric
