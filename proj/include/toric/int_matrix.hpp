#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense matrix of arbitrary-precision integers, row-major.
/// Zero columns (or zero rows) are legal and represent empty generating sets.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<Int> row(int i) const;
  std::vector<Int> col(int j) const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;

  /// Submatrix made of the columns listed in `idx`, in that order.
  IntMatrix columns(const std::vector<int>& idx) const;

  /// Stacks `other` below this matrix (column counts must agree).
  IntMatrix stacked(const IntMatrix& other) const;

  bool is_zero() const;
  std::string to_string() const;

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

struct HnfResult {
  IntMatrix h;  // canonical row HNF of the input
  IntMatrix u;  // unimodular, u * a == h
};

/// Canonical row Hermite normal form: pivots positive, entries above each
/// pivot reduced into [0, pivot), zero rows at the bottom. Unique per row
/// lattice.
HnfResult hnf(const IntMatrix& a);

struct SnfDecomposition {
  IntMatrix left;         // unimodular r x r
  std::vector<Int> diag;  // invariant factors d_1 | d_2 | ... | d_k, d_i > 0
  IntMatrix right;        // unimodular n x n
};

/// Smith normal form: left * a * right is diagonal(diag) padded with zeros.
SnfDecomposition snf(const IntMatrix& a);

Int det(const IntMatrix& a);
int rank(const IntMatrix& a);

/// Basis of the right kernel {x : a*x = 0}, returned as rows of a matrix.
/// The basis spans the full (saturated) kernel lattice.
IntMatrix right_kernel(const IntMatrix& a);

struct Cokernel {
  int free_rank = 0;
  std::vector<Int> torsion;            // invariant factors > 1
  std::vector<std::vector<Int>> lifts;  // generator lifts in Z^r, one per factor
};

/// Structure of Z^r / <columns of a> for an r x k matrix (k = 0 allowed).
Cokernel cokernel(const IntMatrix& a);

}  // namespace toric
