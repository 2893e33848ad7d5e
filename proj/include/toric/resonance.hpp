// Degree-one resonance varieties of the cohomology algebras built in
// cohom.hpp.  R^1 is the locus of degree-one classes annihilated by some
// independent degree-one class; for the arrangements treated here it is a
// finite union of planes through the origin, and we compute those planes
// exactly by intersecting the kernel of the wedge-square map with the
// Grassmannian of decomposable tensors.
#pragma once

#include <vector>

#include "toric/cohom.hpp"
#include "toric/int_matrix.hpp"
#include "toric/lattice.hpp"
#include "toric/qlinalg.hpp"

namespace toric {

/// A two-dimensional subspace of Q^k, stored as the reduced row-echelon
/// basis so that equal planes compare equal entrywise.
struct Plane {
  QMatrix basis;  // 2 x k, reduced row echelon form

  int ambient_dim() const { return basis.cols(); }
  bool operator==(const Plane& other) const;
  bool operator<(const Plane& other) const;  // entrywise lexicographic
};

/// Plane spanned by u and v; throws std::invalid_argument if dependent.
Plane make_plane(const std::vector<Rat>& u, const std::vector<Rat>& v);

/// Pluecker coordinates x_ij (i < j, lexicographic) of the plane's reduced
/// basis.  The leading nonzero coordinate is 1.
std::vector<Rat> plucker_coordinates(const Plane& p);

/// Reconstructs the plane from a Pluecker vector of length C(k,2); throws
/// std::invalid_argument if the vector is zero or fails a Pfaffian quadric.
Plane plane_from_plucker(const std::vector<Rat>& p, int k);

/// Ordered basis of the degree-one quotient: one hypertorus class per
/// column (omega_i or the single omega-bar of the column's hypertorus,
/// in column order), followed by the r coordinate classes of the ambient
/// torus expressed through the characters psi.  Requires an essential
/// arrangement whose columns are primitive and pairwise distinct; throws
/// std::invalid_argument otherwise.
std::vector<CohomElement> h1_standard_basis(const GradedAlgebraQ& a, const IntMatrix& n);

/// Dimension of the kernel of multiplication by the degree-one class alpha
/// as a map from the degree-one quotient to the degree-two quotient.
int delta_kernel_dim(const GradedAlgebraQ& a, const CohomElement& alpha);

/// Is alpha in R^1?  True when alpha vanishes, or when some class outside
/// the line of alpha multiplies it to zero.
bool in_r1(const GradedAlgebraQ& a, const CohomElement& alpha);

struct WedgeKernel {
  int dim;
  std::vector<std::vector<Rat>> basis;  // Pluecker coordinates, C(k,2) each
};

/// Kernel of the wedge-square map Lambda^2 H^1 -> H^2 in the coordinates of
/// h1_standard_basis.
WedgeKernel wedge_kernel(const GradedAlgebraQ& a, const IntMatrix& n);

/// The components of R^1, each a plane in the coordinates of
/// h1_standard_basis, certified complete against the degree of the
/// zero-dimensional scheme cut out by the wedge kernel and the Pfaffian
/// quadrics.  Throws std::runtime_error when the scheme has positive
/// dimension or when the certification count does not match.
std::vector<Plane> resonance_components(const GradedAlgebraQ& a, const IntMatrix& n);

/// For each plane P, the saturated sublattice P intersect lambda (ambient
/// dimension must match).
std::vector<Lattice> resonance_lattices(const std::vector<Plane>& planes,
                                        const Lattice& lambda);

}  // namespace toric
