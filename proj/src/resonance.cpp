#include "toric/resonance.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "toric/groebner.hpp"

namespace toric {

namespace {

// Index of the pair (i, j), i < j, in the lexicographic list of pairs
// drawn from {0, ..., k-1}.
int pair_index(int i, int j, int k) {
  return i * (2 * k - i - 1) / 2 + (j - i - 1);
}

int pair_count(int k) { return k * (k - 1) / 2; }

}  // namespace

bool Plane::operator==(const Plane& other) const {
  if (basis.cols() != other.basis.cols()) return false;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < basis.cols(); ++j)
      if (basis.at(i, j) != other.basis.at(i, j)) return false;
  return true;
}

bool Plane::operator<(const Plane& other) const {
  if (basis.cols() != other.basis.cols()) return basis.cols() < other.basis.cols();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < basis.cols(); ++j) {
      if (basis.at(i, j) != other.basis.at(i, j))
        return basis.at(i, j) < other.basis.at(i, j);
    }
  return false;
}

Plane make_plane(const std::vector<Rat>& u, const std::vector<Rat>& v) {
  if (u.size() != v.size()) throw std::invalid_argument("plane spans of unequal length");
  QMatrix m(2, static_cast<int>(u.size()));
  for (int j = 0; j < m.cols(); ++j) {
    m.at(0, j) = u[j];
    m.at(1, j) = v[j];
  }
  rref(m);
  if (qrank(m) != 2) throw std::invalid_argument("plane spanning vectors are dependent");
  Plane p;
  p.basis = m;
  return p;
}

std::vector<Rat> plucker_coordinates(const Plane& p) {
  int k = p.basis.cols();
  std::vector<Rat> out(pair_count(k), Rat(0));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      out[pair_index(i, j, k)] =
          p.basis.at(0, i) * p.basis.at(1, j) - p.basis.at(0, j) * p.basis.at(1, i);
  return out;
}

Plane plane_from_plucker(const std::vector<Rat>& p, int k) {
  if (static_cast<int>(p.size()) != pair_count(k))
    throw std::invalid_argument("Pluecker vector has the wrong length");
  auto w = [&](int i, int j) -> Rat {
    if (i == j) return Rat(0);
    if (i < j) return p[pair_index(i, j, k)];
    return -p[pair_index(j, i, k)];
  };
  // The Pfaffian quadrics characterise decomposability.
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int l = j + 1; l < k; ++l)
        for (int m = l + 1; m < k; ++m)
          if (w(i, j) * w(l, m) - w(i, l) * w(j, m) + w(i, m) * w(j, l) != 0)
            throw std::invalid_argument("Pluecker vector is not decomposable");
  int a = -1, b = -1;
  for (int i = 0; i < k && a < 0; ++i)
    for (int j = i + 1; j < k; ++j)
      if (p[pair_index(i, j, k)] != 0) {
        a = i;
        b = j;
        break;
      }
  if (a < 0) throw std::invalid_argument("Pluecker vector is zero");
  // Rows a and b of the antisymmetric matrix span the plane when w = u ^ v.
  std::vector<Rat> u(k), v(k);
  for (int l = 0; l < k; ++l) {
    u[l] = w(a, l);
    v[l] = w(b, l);
  }
  Plane out = make_plane(u, v);
  // The round trip must reproduce p projectively.
  std::vector<Rat> q = plucker_coordinates(out);
  const Rat scale = p[pair_index(a, b, k)] / q[pair_index(a, b, k)];
  for (size_t t = 0; t < q.size(); ++t) assert(q[t] * scale == p[t]);
  return out;
}

std::vector<CohomElement> h1_standard_basis(const GradedAlgebraQ& a, const IntMatrix& n) {
  const int r = n.rows();
  const int cols = n.cols();
  if (rank(n) != r)
    throw std::invalid_argument("degree-one chart requires an essential arrangement");
  std::vector<CohomElement> basis;
  for (int i = 0; i < cols; ++i) {
    int g = a.omega_index(i);
    if (g < 0) {
      g = a.omegabar_index({i}, 0);
      if (g < 0 || a.omegabar_index({i}, 1) >= 0)
        throw std::invalid_argument("degree-one chart requires connected hypertori");
    }
    basis.push_back(a.generator(g));
  }
  // Coordinate classes of the ambient torus: solve n x = e_j and read the
  // same combination off the characters psi.
  QMatrix nq(n);
  for (int j = 0; j < r; ++j) {
    std::vector<Rat> e(r, Rat(0));
    e[j] = Rat(1);
    auto x = qsolve(nq, e);
    assert(x.has_value());
    CohomElement cls;
    cls.degree = 1;
    for (int i = 0; i < cols; ++i)
      if ((*x)[i] != 0) cls = cls + (*x)[i] * a.generator(a.psi_index(i));
    basis.push_back(cls);
  }
  if (a.graded_dimension(1) != cols + r)
    throw std::invalid_argument("degree-one chart requires primitive distinct columns");
  return basis;
}

int delta_kernel_dim(const GradedAlgebraQ& a, const CohomElement& alpha) {
  assert(alpha.terms.empty() || alpha.degree == 1);
  if (a.is_zero(alpha)) return a.graded_dimension(1);
  return a.graded_dimension(1) - a.map_rank(alpha, 1);
}

bool in_r1(const GradedAlgebraQ& a, const CohomElement& alpha) {
  if (a.is_zero(alpha)) return true;
  return delta_kernel_dim(a, alpha) >= 2;
}

WedgeKernel wedge_kernel(const GradedAlgebraQ& a, const IntMatrix& n) {
  std::vector<CohomElement> basis = h1_standard_basis(a, n);
  const int k = static_cast<int>(basis.size());
  std::vector<std::vector<Rat>> cols;
  int height = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      std::vector<Rat> c = a.reduced_coordinates(a.multiply(basis[i], basis[j]));
      height = static_cast<int>(c.size());
      cols.push_back(std::move(c));
    }
  QMatrix m(height, pair_count(k));
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < height; ++i) m.at(i, j) = cols[j][i];
  WedgeKernel out;
  out.basis = qkernel(m);
  out.dim = static_cast<int>(out.basis.size());
  return out;
}

std::vector<Plane> resonance_components(const GradedAlgebraQ& a, const IntMatrix& n) {
  std::vector<CohomElement> basis = h1_standard_basis(a, n);
  const int k = static_cast<int>(basis.size());
  const int nvars = pair_count(k);

  // The scheme of decomposable classes in the wedge kernel.
  WedgeKernel kern = wedge_kernel(a, n);
  std::vector<MultiPoly> gens =
      linear_ideal_of_subspace(kern.basis, nvars, MonoOrder::grevlex);
  for (MultiPoly& q : grassmann_pfaffian_ideal(k, MonoOrder::grevlex))
    gens.push_back(std::move(q));
  std::vector<MultiPoly> gb = groebner_basis(gens);
  ProjectiveInvariants inv = projective_dim_degree(gb, nvars);
  if (inv.dimension > 0)
    throw std::runtime_error("unsupported: R^1 component of positive dimension");

  // Candidate annihilated planes: kernels of multiplication by the
  // hypertorus classes and by their pairwise sums and differences.
  std::vector<CohomElement> cands;
  for (int i = 0; i < n.cols(); ++i) cands.push_back(basis[i]);
  for (int i = 0; i < n.cols(); ++i)
    for (int j = i + 1; j < n.cols(); ++j) {
      cands.push_back(basis[i] - basis[j]);
      cands.push_back(basis[i] + basis[j]);
    }

  std::set<Plane> found;
  for (const CohomElement& alpha : cands) {
    std::vector<std::vector<Rat>> cols;
    int height = 0;
    for (int i = 0; i < k; ++i) {
      std::vector<Rat> c = a.reduced_coordinates(a.multiply(alpha, basis[i]));
      height = static_cast<int>(c.size());
      cols.push_back(std::move(c));
    }
    QMatrix m(height, k);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < height; ++i) m.at(i, j) = cols[j][i];
    std::vector<std::vector<Rat>> ker = qkernel(m);
    if (ker.size() != 2) continue;
    Plane p = make_plane(ker[0], ker[1]);
    if (!contains_point(gens, plucker_coordinates(p))) continue;
    found.insert(p);
  }
  if (static_cast<long>(found.size()) != inv.degree)
    throw std::runtime_error("unresolved resonance points");
  return std::vector<Plane>(found.begin(), found.end());
}

std::vector<Lattice> resonance_lattices(const std::vector<Plane>& planes,
                                        const Lattice& lambda) {
  std::vector<Lattice> out;
  for (const Plane& p : planes) {
    const int k = p.ambient_dim();
    if (k != lambda.ambient_dim())
      throw std::invalid_argument("plane and lattice ambient dimensions differ");
    // Integer linear forms cutting out the plane.
    std::vector<std::vector<Rat>> forms = qkernel(p.basis);
    IntMatrix c(static_cast<int>(forms.size()), k);
    for (size_t i = 0; i < forms.size(); ++i) {
      Int lcm = 1;
      for (const Rat& x : forms[i]) {
        Int den = x.get_den();
        lcm = lcm / gcd(lcm, den) * den;
      }
      for (int j = 0; j < k; ++j) {
        Rat scaled = forms[i][j] * Rat(lcm);
        c.at(static_cast<int>(i), j) = scaled.get_num();
      }
    }
    // Solve c (t B) = 0 for integer coefficient vectors t over the lattice
    // basis B; right_kernel returns the saturated solution lattice, so the
    // result is exactly the intersection.
    IntMatrix m = c * lambda.basis().transpose();
    IntMatrix t = right_kernel(m);
    out.push_back(Lattice(k, t * lambda.basis()));
  }
  return out;
}

}  // namespace toric
