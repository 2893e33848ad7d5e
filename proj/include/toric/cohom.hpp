// Cohomology algebras of complements of central toric arrangements, built as
// degree-wise quotients of a free graded-commutative algebra.  Two
// presentations are available: an integral one for totally unimodular
// arrangements (generators omega_i, psi_i) and a rational one in general
// (generators psi_i and omegabar_{W,S} for layers W cut out by independent
// subsets S).  Dimensions, products and multiplication ranks are computed by
// exact linear algebra degree by degree.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "toric/arithmat.hpp"
#include "toric/int_matrix.hpp"
#include "toric/layers.hpp"
#include "toric/qlinalg.hpp"

namespace toric {

struct GeneratorLabel {
  enum class Kind { Psi, OmegaSmall, Torus, OmegaBar };

  Kind kind = Kind::Psi;
  int index = -1;           // hypertorus index (Psi / OmegaSmall) or coordinate (Torus)
  std::vector<int> subset;  // OmegaBar: the sorted independent column subset S
  int component = -1;       // OmegaBar: position within flat_components(N, subset)
  int degree = 1;           // |S| for OmegaBar, 1 otherwise

  bool operator==(const GeneratorLabel&) const = default;
  std::string to_string() const;  // e.g. "psi_2", "omega_1", "obar{1,3}#2"
};

/// Monomial in normal form: (generator index, exponent) pairs sorted by
/// generator index.  Odd-degree generators anticommute and square to zero, so
/// they carry exponent 1; even-degree generators commute.
using CohomMono = std::vector<std::pair<int, int>>;

/// Homogeneous element: a sparse rational combination of normal-form
/// monomials of one fixed degree.  Zero coefficients are never stored.
struct CohomElement {
  int degree = 0;
  std::map<CohomMono, Rat> terms;

  bool structurally_zero() const { return terms.empty(); }
};

CohomElement operator+(const CohomElement& a, const CohomElement& b);
CohomElement operator-(const CohomElement& a, const CohomElement& b);
CohomElement operator*(const Rat& c, const CohomElement& a);

class GradedAlgebraQ {
 public:
  GradedAlgebraQ(int top_degree, std::vector<GeneratorLabel> gens);

  int top_degree() const { return top_; }
  const std::vector<GeneratorLabel>& generators() const { return gens_; }
  const std::vector<CohomElement>& relations() const { return rels_; }

  /// Appends a homogeneous relation (must be called before any dimension or
  /// product query; relations are frozen once caches are warm).
  void add_relation(CohomElement r);

  CohomElement unit() const;
  CohomElement generator(int g) const;
  int find_generator(const GeneratorLabel& label) const;  // -1 when absent
  int psi_index(int i) const;
  int omega_index(int i) const;
  int omegabar_index(const std::vector<int>& subset, int component) const;

  /// Free graded-commutative product (no reduction); degrees beyond the top
  /// degree collapse to the zero element.
  CohomElement multiply(const CohomElement& x, const CohomElement& y) const;

  const std::vector<CohomMono>& monomial_basis(int d) const;
  std::vector<Rat> coordinates(const CohomElement& x) const;

  int graded_dimension(int d) const;
  std::vector<int> graded_dimensions() const;  // degrees 0..top

  /// Zero test modulo the degree-d relation subspace.
  bool is_zero(const CohomElement& x) const;

  /// Monomial coordinates of x reduced against the relation subspace of its
  /// degree; two elements are equal in the quotient iff these agree.
  std::vector<Rat> reduced_coordinates(const CohomElement& x) const;

  /// Rank of multiplication by alpha as a map from the degree-d quotient
  /// into the degree d + deg(alpha) quotient.
  int map_rank(const CohomElement& alpha, int d) const;

  /// Rank of the multiplication map from degree p times degree q into the
  /// degree p+q quotient.
  int multiplication_rank(int p, int q) const;

  /// Relation rows of degree d as integer vectors (requires all relation
  /// coefficients integral, which holds for the unimodular presentation).
  IntMatrix integral_relation_rows(int d) const;

 private:
  struct DegreeCache {
    std::vector<CohomMono> basis;
    std::map<CohomMono, int> index;
    bool built = false;
  };

  const DegreeCache& degree_cache(int d) const;
  const EchelonBasis& relation_space(int d) const;
  bool mono_mul(const CohomMono& a, const CohomMono& b, CohomMono& out, int& sign) const;

  int top_;
  std::vector<GeneratorLabel> gens_;
  std::vector<bool> odd_;
  std::vector<CohomElement> rels_;
  mutable std::map<int, DegreeCache> cache_;
  mutable std::map<int, EchelonBasis> relspace_;
};

/// Integral presentation for totally unimodular arrangements: generators
/// omega_i, psi_i (plus free torus classes when the columns do not span),
/// relations omega_i psi_i = 0 and, per circuit and sign of its primitive
/// dependency c, the linear relation sum c_m psi_{i_m} = 0 together with the
/// product relation prod_{m>=2} (gamma_m - gamma_1) = 0 where
///   gamma_m = omega_{i_m} + sum_{l<m} c_l psi_{i_l} - [c_m < 0] psi_{i_m}.
/// Throws std::invalid_argument on non-unimodular input.
GradedAlgebraQ build_unimodular_presentation(const IntMatrix& n);

/// Rational presentation for arbitrary central arrangements: generators
/// psi_i and omegabar_{W,S} (S independent, W a component of the flat of S),
/// plus free torus classes when the columns do not span; relation families:
/// annihilation omegabar_{W,S} psi_i for i in S, pairwise omegabar products
/// (zero, or rewritten into degree-|S|+|T| generators with the merge-parity
/// sign), linear circuit dependencies among the psi, and the circuit/layer
/// relations mixing omegabar_{W,S} with even psi-products.
/// Throws std::length_error when the generator count exceeds the guard.
GradedAlgebraQ build_rational_presentation(const IntMatrix& n, int generator_guard = 10000);

/// The algebra modulo the ideal generated by the psi classes.
GradedAlgebraQ quotient_by_torus_ideal(const GradedAlgebraQ& a);

/// Degree-k integral piece for totally unimodular input, via the Smith
/// normal form of the relation rows.
ZModule integral_graded_unimodular(const IntMatrix& n, int k);

}  // namespace toric
