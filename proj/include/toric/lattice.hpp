#pragma once

#include <optional>
#include <vector>

#include "toric/int_matrix.hpp"

namespace toric {

struct FiniteAbelianGroup {
  std::vector<Int> invariant_factors;       // d_1 | d_2 | ..., each > 1
  std::vector<std::vector<Int>> generator_lifts;  // ambient vectors, one per factor

  Int order() const {
    Int o = 1;
    for (const Int& d : invariant_factors) o *= d;
    return o;
  }
  bool trivial() const { return invariant_factors.empty(); }
  bool operator==(const FiniteAbelianGroup& g) const {
    return invariant_factors == g.invariant_factors;
  }
};

/// Sublattice of Z^m stored by its canonical row-HNF basis; the stored basis
/// is unique per lattice, so equality of lattices is equality of fields.
class Lattice {
 public:
  explicit Lattice(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}
  Lattice(int ambient_dim, const IntMatrix& generators);

  static Lattice full(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  bool operator==(const Lattice& other) const = default;

  bool contains(const std::vector<Int>& v) const;
  bool contains(const Lattice& other) const;

  /// Integer coordinates of v on the basis rows; nullopt if v is outside.
  std::optional<std::vector<Int>> coordinates(const std::vector<Int>& v) const;

 private:
  int ambient_;
  IntMatrix basis_;  // rank x ambient, canonical HNF, no zero rows
};

Lattice saturation(const Lattice& l);
Lattice intersect(const Lattice& l1, const Lattice& l2);
Lattice lattice_sum(const Lattice& l1, const Lattice& l2);

/// v in n*L ?
bool in_scaled(const std::vector<Int>& v, const Int& n, const Lattice& l);

/// Lsup / Lsub for Lsub a finite-index sublattice of Lsup (equal ranks).
/// Generator lifts are returned in ambient coordinates.
FiniteAbelianGroup quotient_group(const Lattice& lsup, const Lattice& lsub);

}  // namespace toric
