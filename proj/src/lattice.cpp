#include "toric/lattice.hpp"

#include <stdexcept>

namespace toric {

namespace {

IntMatrix drop_zero_rows(const IntMatrix& m) {
  std::vector<int> keep;
  for (int i = 0; i < m.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (!zero) keep.push_back(i);
  }
  IntMatrix out(static_cast<int>(keep.size()), m.cols());
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(keep[i], j);
  return out;
}

}  // namespace

Lattice::Lattice(int ambient_dim, const IntMatrix& generators)
    : ambient_(ambient_dim), basis_(0, ambient_dim) {
  if (generators.rows() > 0 && generators.cols() != ambient_dim)
    throw std::invalid_argument("generator width does not match ambient dimension");
  basis_ = drop_zero_rows(hnf(generators).h);
}

Lattice Lattice::full(int ambient_dim) { return Lattice(ambient_dim, IntMatrix::identity(ambient_dim)); }

std::optional<std::vector<Int>> Lattice::coordinates(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("ambient mismatch");
  // Back-substitution against the HNF basis: pivots are strictly increasing.
  std::vector<Int> rem = v;
  std::vector<Int> coeff(basis_.rows());
  for (int i = 0; i < basis_.rows(); ++i) {
    int p = 0;
    while (p < ambient_ && basis_.at(i, p) == 0) ++p;
    Int q = rem[p] / basis_.at(i, p);
    if (q * basis_.at(i, p) != rem[p]) return std::nullopt;
    coeff[i] = q;
    for (int j = p; j < ambient_; ++j) rem[j] -= q * basis_.at(i, j);
    // columns before p must have been zeroed by earlier pivots
  }
  for (const Int& x : rem)
    if (x != 0) return std::nullopt;
  return coeff;
}

bool Lattice::contains(const std::vector<Int>& v) const { return coordinates(v).has_value(); }

bool Lattice::contains(const Lattice& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch");
  for (int i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Lattice saturation(const Lattice& l) {
  if (l.rank() == 0) return l;
  // sat(L) = { x : x * K = 0 } where the columns of K span ker(B * -),
  // i.e. two kernel computations.
  IntMatrix k = right_kernel(l.basis());   // rows k_i with B * k_i^T = 0
  IntMatrix sat = right_kernel(k);         // rows x with k * x^T = 0
  return Lattice(l.ambient_dim(), sat);
}

Lattice intersect(const Lattice& l1, const Lattice& l2) {
  if (l1.ambient_dim() != l2.ambient_dim()) throw std::invalid_argument("ambient mismatch");
  const IntMatrix& b1 = l1.basis();
  const IntMatrix& b2 = l2.basis();
  // Solve x*b1 = y*b2: kernel of the stacked transpose picks out pairs (x,-y).
  IntMatrix stacked = b1.stacked(b2);  // (k1+k2) x m
  IntMatrix ker = right_kernel(stacked.transpose());  // rows (x | -y) with x*b1 - y...
  // ker rows c satisfy c * stacked = 0, i.e. c1*b1 + c2*b2 = 0, so c1*b1 = -(c2*b2).
  IntMatrix gens(ker.rows(), l1.ambient_dim());
  for (int i = 0; i < ker.rows(); ++i)
    for (int j = 0; j < l1.ambient_dim(); ++j) {
      Int s = 0;
      for (int t = 0; t < b1.rows(); ++t) s += ker.at(i, t) * b1.at(t, j);
      gens.at(i, j) = s;
    }
  return Lattice(l1.ambient_dim(), gens);
}

Lattice lattice_sum(const Lattice& l1, const Lattice& l2) {
  if (l1.ambient_dim() != l2.ambient_dim()) throw std::invalid_argument("ambient mismatch");
  return Lattice(l1.ambient_dim(), l1.basis().stacked(l2.basis()));
}

bool in_scaled(const std::vector<Int>& v, const Int& n, const Lattice& l) {
  if (n == 0) {
    for (const Int& x : v)
      if (x != 0) return false;
    return true;
  }
  auto c = l.coordinates(v);
  if (!c) return false;
  for (const Int& x : *c)
    if (x % n != 0) return false;
  return true;
}

FiniteAbelianGroup quotient_group(const Lattice& lsup, const Lattice& lsub) {
  if (lsup.ambient_dim() != lsub.ambient_dim()) throw std::invalid_argument("ambient mismatch");
  if (lsup.rank() != lsub.rank()) throw std::invalid_argument("rank mismatch in quotient");
  const int k = lsup.rank();
  // Express the sublattice basis in coordinates of the superlattice basis.
  IntMatrix m(k, k);
  for (int i = 0; i < k; ++i) {
    auto c = lsup.coordinates(lsub.basis().row(i));
    if (!c) throw std::invalid_argument("sublattice not contained in superlattice");
    for (int j = 0; j < k; ++j) m.at(i, j) = (*c)[j];
  }
  // Z^k / rowspan(m): with u*m*v = D, coordinates y = x*v diagonalize the
  // quotient; generator of the d_i factor is e_i in y-coordinates.
  SnfDecomposition s = snf(m);
  HnfResult vinv = hnf(s.right);  // vinv.u = right^{-1}
  FiniteAbelianGroup g;
  for (size_t i = 0; i < s.diag.size(); ++i) {
    if (s.diag[i] > 1) {
      g.invariant_factors.push_back(s.diag[i]);
      // x = e_i * v^{-1} in lsup-basis coordinates, then to ambient.
      std::vector<Int> lift(lsup.ambient_dim());
      for (int j = 0; j < lsup.ambient_dim(); ++j) {
        Int sum = 0;
        for (int t = 0; t < k; ++t) sum += vinv.u.at(static_cast<int>(i), t) * lsup.basis().at(t, j);
        lift[j] = sum;
      }
      g.generator_lifts.push_back(std::move(lift));
    }
  }
  return g;
}

}  // namespace toric
