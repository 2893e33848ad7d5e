// Exact linear algebra over Q (mpq_class entries).
#pragma once

#include <optional>
#include <vector>

#include "toric/int_matrix.hpp"

namespace toric {

class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
  explicit QMatrix(const IntMatrix& m) : QMatrix(m.rows(), m.cols()) {
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) at(i, j) = Rat(m.at(i, j));
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<Rat> row(int i) const {
    return {data_.begin() + static_cast<size_t>(i) * cols_,
            data_.begin() + static_cast<size_t>(i + 1) * cols_};
  }

 private:
  int rows_, cols_;
  std::vector<Rat> data_;
};

// Incremental row-echelon accumulator: rows are reduced against the current
// echelon set as they arrive.  Used for big relation spaces where building a
// dense matrix up front would waste memory.
class EchelonBasis {
 public:
  explicit EchelonBasis(int width) : width_(width) {}

  // Reduces v against the basis; if nonzero remains, inserts it and returns
  // true.  The inserted row is normalized so the pivot entry is 1.
  bool insert(std::vector<Rat> v);

  // Reduces v against the basis without inserting; returns the remainder.
  std::vector<Rat> reduce(std::vector<Rat> v) const;

  bool in_span(const std::vector<Rat>& v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }
  const std::vector<std::vector<Rat>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivot_cols_; }

 private:
  int width_;
  std::vector<std::vector<Rat>> rows_;   // each has pivot 1, kept reduced below (not above)
  std::vector<int> pivot_cols_;          // pivot column of rows_[k]
};

// Row-reduce in place to reduced row-echelon form; returns pivot columns.
std::vector<int> rref(QMatrix& m);

int qrank(const QMatrix& m);

// Basis for the right kernel {x : m x = 0}, one vector per row of the result.
std::vector<std::vector<Rat>> qkernel(const QMatrix& m);

// Solve m x = b; nullopt if inconsistent.  If underdetermined, returns the
// solution with zero free variables.
std::optional<std::vector<Rat>> qsolve(const QMatrix& m, const std::vector<Rat>& b);

}  // namespace toric
