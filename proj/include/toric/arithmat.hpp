// Arithmetic matroids and Z-matroids of integer matrices, with Tutte and
// Poincare polynomials.  Subsets of the ground set are bitmasks in column
// order throughout; comparisons are identity on the ground order.
#pragma once

#include <vector>

#include "toric/int_matrix.hpp"
#include "toric/poly.hpp"

namespace toric {

// 2^n subset tables get big; callers must pass force=true past this point.
inline constexpr int kSubsetGuard = 20;

struct ArithmeticMatroid {
  int n = 0;          // ground set size
  int r = 0;          // ambient dimension (rows of the defining matrix)
  std::vector<int> rk;    // rank per bitmask, size 2^n
  std::vector<Int> mult;  // multiplicity per bitmask

  int rank_full() const { return rk.empty() ? 0 : rk.back(); }
  bool operator==(const ArithmeticMatroid& o) const {
    return n == o.n && rk == o.rk && mult == o.mult;
  }
};

struct ZModule {
  int free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1
  bool operator==(const ZModule& o) const = default;
};

struct ZMatroid {
  int n = 0;
  std::vector<ZModule> table;  // per bitmask
  bool operator==(const ZMatroid& o) const = default;
};

ArithmeticMatroid matroid_from_matrix(const IntMatrix& N);
ZMatroid zmatroid_from_matrix(const IntMatrix& N);

/// The three matroid rank axioms, checked exhaustively over subset pairs.
bool rank_axioms_check(const ArithmeticMatroid& m);

BivariatePolyZ arithmetic_tutte(const ArithmeticMatroid& m);

/// Poincare polynomial of the complement (degree = ambient dimension r; the
/// (1+t)^(r - rk) factor accounts for non-essential arrangements).
UniPolyZ poincare_polynomial(const ArithmeticMatroid& m);

bool is_totally_unimodular(const IntMatrix& N);

/// Minimal dependent column subsets, each sorted ascending.
std::vector<std::vector<int>> circuits(const IntMatrix& N);

/// The primitive integer dependency supported on a circuit (kernel of the
/// chosen columns, normalized so the first entry is positive).  Indexed
/// parallel to the circuit.
std::vector<Int> primitive_dependency(const IntMatrix& N, const std::vector<int>& circuit);

}  // namespace toric
