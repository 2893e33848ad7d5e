#include "toric/arithmat.hpp"

#include <cassert>

namespace toric {

namespace {

std::vector<int> subset_columns(unsigned mask, int n) {
  std::vector<int> idx;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) idx.push_back(i);
  return idx;
}

}  // namespace

ArithmeticMatroid matroid_from_matrix(const IntMatrix& N) {
  ArithmeticMatroid m;
  m.n = N.cols();
  m.r = N.rows();
  size_t total = size_t(1) << m.n;
  m.rk.resize(total);
  m.mult.resize(total);
  for (size_t mask = 0; mask < total; ++mask) {
    IntMatrix sub = N.columns(subset_columns(static_cast<unsigned>(mask), m.n));
    auto s = snf(sub);
    m.rk[mask] = static_cast<int>(s.diag.size());
    Int mult = 1;
    for (const Int& d : s.diag) mult *= d;
    m.mult[mask] = mult;
  }
  return m;
}

ZMatroid zmatroid_from_matrix(const IntMatrix& N) {
  ZMatroid z;
  z.n = N.cols();
  size_t total = size_t(1) << z.n;
  z.table.resize(total);
  for (size_t mask = 0; mask < total; ++mask) {
    auto c = cokernel(N.columns(subset_columns(static_cast<unsigned>(mask), z.n)));
    z.table[mask] = {c.free_rank, c.torsion};
  }
  return z;
}

bool rank_axioms_check(const ArithmeticMatroid& m) {
  size_t total = size_t(1) << m.n;
  auto popcount = [](size_t x) {
    int c = 0;
    for (; x; x >>= 1) c += static_cast<int>(x & 1);
    return c;
  };
  for (size_t s = 0; s < total; ++s) {
    if (m.rk[s] < 0 || m.rk[s] > popcount(s)) return false;
    // unit increase: rk(S) <= rk(S + e) <= rk(S) + 1
    for (int e = 0; e < m.n; ++e) {
      if (s & (size_t(1) << e)) continue;
      int up = m.rk[s | (size_t(1) << e)];
      if (up < m.rk[s] || up > m.rk[s] + 1) return false;
    }
  }
  // submodularity over all pairs
  for (size_t s = 0; s < total; ++s)
    for (size_t t = 0; t < total; ++t)
      if (m.rk[s & t] + m.rk[s | t] > m.rk[s] + m.rk[t]) return false;
  return true;
}

BivariatePolyZ arithmetic_tutte(const ArithmeticMatroid& m) {
  BivariatePolyZ xm1, ym1;
  xm1.add_term(1, 0, 1);
  xm1.add_term(0, 0, -1);
  ym1.add_term(0, 1, 1);
  ym1.add_term(0, 0, -1);
  std::vector<BivariatePolyZ> xp(m.n + 1), yp(m.n + 1);
  BivariatePolyZ one;
  one.add_term(0, 0, 1);
  xp[0] = yp[0] = one;
  for (int i = 1; i <= m.n; ++i) {
    xp[i] = xp[i - 1] * xm1;
    yp[i] = yp[i - 1] * ym1;
  }
  int full = m.rank_full();
  BivariatePolyZ acc;
  size_t total = size_t(1) << m.n;
  for (size_t s = 0; s < total; ++s) {
    int size = 0;
    for (size_t x = s; x; x >>= 1) size += static_cast<int>(x & 1);
    BivariatePolyZ term = xp[full - m.rk[s]] * yp[size - m.rk[s]];
    BivariatePolyZ scaled;
    for (const auto& [k, c] : term.terms()) scaled.add_term(k.first, k.second, c * m.mult[s]);
    acc = acc + scaled;
  }
  return acc;
}

UniPolyZ poincare_polynomial(const ArithmeticMatroid& m) {
  return poincare_from_tutte(arithmetic_tutte(m), m.r, m.rank_full());
}

bool is_totally_unimodular(const IntMatrix& N) {
  ArithmeticMatroid m = matroid_from_matrix(N);
  for (const Int& v : m.mult)
    if (v != 1) return false;
  return true;
}

std::vector<std::vector<int>> circuits(const IntMatrix& N) {
  int n = N.cols();
  size_t total = size_t(1) << n;
  std::vector<bool> dependent(total, false);
  std::vector<std::vector<int>> out;
  for (size_t mask = 1; mask < total; ++mask) {
    // skip if a proper subset is already dependent
    bool has_dep_subset = false;
    for (int i = 0; i < n && !has_dep_subset; ++i)
      if ((mask & (size_t(1) << i)) && dependent[mask ^ (size_t(1) << i)]) has_dep_subset = true;
    if (has_dep_subset) {
      dependent[mask] = true;
      continue;
    }
    std::vector<int> idx = subset_columns(static_cast<unsigned>(mask), n);
    if (rank(N.columns(idx)) < static_cast<int>(idx.size())) {
      dependent[mask] = true;
      out.push_back(idx);
    }
  }
  return out;
}

std::vector<Int> primitive_dependency(const IntMatrix& N, const std::vector<int>& circuit) {
  IntMatrix ker = right_kernel(N.columns(circuit));
  assert(ker.rows() == 1);
  std::vector<Int> v = ker.row(0);
  for (const Int& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : v) y = -y;
    break;
  }
  return v;
}

}  // namespace toric
