#include "toric/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace toric {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  a_.resize(static_cast<size_t>(rows_) * cols_);
  int i = 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged initializer");
    int j = 0;
    for (long v : r) at(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Int> IntMatrix::row(int i) const {
  std::vector<Int> r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

std::vector<Int> IntMatrix::col(int j) const {
  std::vector<Int> c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch in product");
  IntMatrix p(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < other.cols_; ++j) p.at(i, j) += v * other.at(k, j);
    }
  return p;
}

IntMatrix IntMatrix::columns(const std::vector<int>& idx) const {
  IntMatrix m(rows_, static_cast<int>(idx.size()));
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < rows_; ++i) m.at(i, j) = at(i, idx[j]);
  return m;
}

IntMatrix IntMatrix::stacked(const IntMatrix& other) const {
  if (cols_ != other.cols_ && other.rows_ != 0 && rows_ != 0)
    throw std::invalid_argument("column mismatch in stack");
  int c = rows_ ? cols_ : other.cols_;
  IntMatrix m(rows_ + other.rows_, c);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (int i = 0; i < other.rows_; ++i)
    for (int j = 0; j < other.cols_; ++j) m.at(rows_ + i, j) = other.at(i, j);
  return m;
}

bool IntMatrix::is_zero() const {
  for (const Int& v : a_)
    if (v != 0) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    os << "\n";
  }
  return os.str();
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void negate_row(IntMatrix& m, int i) {
  for (int j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

// row[dst] += q * row[src]
void add_row_multiple(IntMatrix& m, int dst, int src, const Int& q) {
  if (q == 0) return;
  for (int j = 0; j < m.cols(); ++j) m.at(dst, j) += q * m.at(src, j);
}

}  // namespace

HnfResult hnf(const IntMatrix& a) {
  const int r = a.rows(), n = a.cols();
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(r);
  int pivot_row = 0;
  for (int col = 0; col < n && pivot_row < r; ++col) {
    // Eliminate below pivot_row in this column by gcd row operations,
    // always pulling the smallest nonzero absolute value into the pivot.
    while (true) {
      int best = -1;
      for (int i = pivot_row; i < r; ++i) {
        if (h.at(i, col) == 0) continue;
        if (best < 0 || mpz_cmpabs(h.at(i, col).get_mpz_t(), h.at(best, col).get_mpz_t()) < 0) best = i;
      }
      if (best < 0) break;  // column all zero below; move on
      if (best != pivot_row) {
        swap_rows(h, pivot_row, best);
        swap_rows(u, pivot_row, best);
      }
      bool reduced = true;
      for (int i = pivot_row + 1; i < r; ++i) {
        if (h.at(i, col) == 0) continue;
        Int q = h.at(i, col) / h.at(pivot_row, col);  // truncated division
        add_row_multiple(h, i, pivot_row, -q);
        add_row_multiple(u, i, pivot_row, -q);
        if (h.at(i, col) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (pivot_row < r && h.at(pivot_row, col) != 0) {
      if (h.at(pivot_row, col) < 0) {
        negate_row(h, pivot_row);
        negate_row(u, pivot_row);
      }
      // Reduce entries above the pivot into [0, pivot).
      for (int i = 0; i < pivot_row; ++i) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(pivot_row, col).get_mpz_t());
        add_row_multiple(h, i, pivot_row, -q);
        add_row_multiple(u, i, pivot_row, -q);
      }
      ++pivot_row;
    }
  }
  return {h, u};
}

SnfDecomposition snf(const IntMatrix& a) {
  const int r = a.rows(), n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(r);
  IntMatrix v = IntMatrix::identity(n);

  auto swap_cols = [&](IntMatrix& m, int x, int y) {
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, x), m.at(i, y));
  };
  auto add_col_multiple = [&](IntMatrix& m, int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < m.rows(); ++i) m.at(i, dst) += q * m.at(i, src);
  };

  int t = 0;
  const int limit = std::min(r, n);
  while (t < limit) {
    // Find smallest nonzero |entry| in the trailing block.
    int pi = -1, pj = -1;
    for (int i = t; i < r; ++i)
      for (int j = t; j < n; ++j) {
        if (d.at(i, j) == 0) continue;
        if (pi < 0 || mpz_cmpabs(d.at(i, j).get_mpz_t(), d.at(pi, pj).get_mpz_t()) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // block is zero
    if (pi != t) {
      swap_rows(d, t, pi);
      swap_rows(u, t, pi);
    }
    if (pj != t) {
      swap_cols(d, t, pj);
      swap_cols(v, t, pj);
    }
    bool clean = true;
    for (int i = t + 1; i < r; ++i) {
      if (d.at(i, t) == 0) continue;
      Int q = d.at(i, t) / d.at(t, t);
      add_row_multiple(d, i, t, -q);
      add_row_multiple(u, i, t, -q);
      if (d.at(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < n; ++j) {
      if (d.at(t, j) == 0) continue;
      Int q = d.at(t, j) / d.at(t, t);
      add_col_multiple(d, j, t, -q);
      add_col_multiple(v, j, t, -q);
      if (d.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;
    // Divisibility fix: make d(t,t) divide everything in the trailing block.
    bool redo = false;
    for (int i = t + 1; i < r && !redo; ++i)
      for (int j = t + 1; j < n && !redo; ++j)
        if (d.at(i, j) % d.at(t, t) != 0) {
          add_row_multiple(d, t, i, 1);
          add_row_multiple(u, t, i, 1);
          redo = true;
        }
    if (redo) continue;
    if (d.at(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
    ++t;
  }

  SnfDecomposition out;
  out.left = u;
  out.right = v;
  for (int i = 0; i < t; ++i) out.diag.push_back(d.at(i, i));
  return out;
}

Int det(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det of non-square matrix");
  // Fraction-free Gaussian elimination (Bareiss).
  int n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int sw = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          sw = i;
          break;
        }
      if (sw < 0) return 0;
      swap_rows(m, k, sw);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev;  // exact by Bareiss
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

int rank(const IntMatrix& a) {
  HnfResult h = hnf(a);
  int rk = 0;
  for (int i = 0; i < h.h.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < h.h.cols(); ++j)
      if (h.h.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (!zero) ++rk;
  }
  return rk;
}

IntMatrix right_kernel(const IntMatrix& a) {
  // Rows u of the HNF transform of a^T with u * a^T = 0 span the kernel.
  HnfResult h = hnf(a.transpose());
  std::vector<int> zero_rows;
  for (int i = 0; i < h.h.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < h.h.cols(); ++j)
      if (h.h.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) zero_rows.push_back(i);
  }
  IntMatrix k(static_cast<int>(zero_rows.size()), a.cols());
  for (int i = 0; i < k.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) k.at(i, j) = h.u.at(zero_rows[i], j);
  return k;
}

Cokernel cokernel(const IntMatrix& a) {
  SnfDecomposition s = snf(a);
  Cokernel out;
  int rk = static_cast<int>(s.diag.size());
  out.free_rank = a.rows() - rk;
  // Column span of a equals left^{-1} * column span of diag(d), so the classes
  // of the columns of left^{-1} generate the quotient with orders d_i.
  // left^{-1} column i = solve left * x = e_i; with left unimodular, use the
  // adjugate-free route: invert by HNF (left is unimodular so HNF(left)=I and
  // the transform is the inverse).
  HnfResult inv = hnf(s.left);
  // inv.u * left = I  =>  left^{-1} = inv.u
  for (int i = 0; i < rk; ++i) {
    if (s.diag[i] > 1) {
      out.torsion.push_back(s.diag[i]);
      std::vector<Int> lift(a.rows());
      for (int j = 0; j < a.rows(); ++j) lift[j] = inv.u.at(j, i);
      out.lifts.push_back(std::move(lift));
    }
  }
  return out;
}

}  // namespace toric
