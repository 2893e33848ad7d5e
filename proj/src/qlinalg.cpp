#include "toric/qlinalg.hpp"

#include <cassert>

namespace toric {

bool EchelonBasis::insert(std::vector<Rat> v) {
  assert(static_cast<int>(v.size()) == width_);
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Rat& c = v[pivot_cols_[k]];
    if (c != 0) {
      Rat f = c;  // basis row has pivot 1
      for (int j = 0; j < width_; ++j)
        if (rows_[k][j] != 0) v[j] -= f * rows_[k][j];
    }
  }
  int p = -1;
  for (int j = 0; j < width_; ++j)
    if (v[j] != 0) { p = j; break; }
  if (p < 0) return false;
  Rat inv = 1 / v[p];
  for (int j = p; j < width_; ++j)
    if (v[j] != 0) v[j] *= inv;
  rows_.push_back(std::move(v));
  pivot_cols_.push_back(p);
  return true;
}

std::vector<Rat> EchelonBasis::reduce(std::vector<Rat> v) const {
  assert(static_cast<int>(v.size()) == width_);
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Rat& c = v[pivot_cols_[k]];
    if (c != 0) {
      Rat f = c;
      for (int j = 0; j < width_; ++j)
        if (rows_[k][j] != 0) v[j] -= f * rows_[k][j];
    }
  }
  return v;
}

bool EchelonBasis::in_span(const std::vector<Rat>& v) const {
  auto r = reduce(v);
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

std::vector<int> rref(QMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pr = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col) != 0) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
    Rat inv = 1 / m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int qrank(const QMatrix& m) {
  QMatrix c = m;
  return static_cast<int>(rref(c).size());
}

std::vector<std::vector<Rat>> qkernel(const QMatrix& m) {
  QMatrix c = m;
  std::vector<int> pivots = rref(c);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> out;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(m.cols());
    v[free] = 1;
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -c.at(static_cast<int>(k), free);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Rat>> qsolve(const QMatrix& m, const std::vector<Rat>& b) {
  assert(static_cast<int>(b.size()) == m.rows());
  QMatrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Rat> x(m.cols());
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(static_cast<int>(k), m.cols());
  return x;
}

}  // namespace toric
