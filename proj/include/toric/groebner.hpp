// Buchberger's algorithm and Hilbert-function invariants for homogeneous
// ideals over Q.  Sized for the small eliminated systems this project
// produces, not for general-purpose computer algebra.
#pragma once

#include <vector>

#include "toric/multipoly.hpp"

namespace toric {

/// Full normal form of f modulo the (not necessarily Groebner) set `basis`.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis);

/// Reduced Groebner basis.  Degree-one generators are first put in reduced
/// row-echelon form and substituted into the rest, so the pivot variables
/// never enter the pairing loop; the echelon linear forms rejoin the output
/// (their leading variables are coprime to every remaining leading term, so
/// the union is a Groebner basis by Buchberger's first criterion).
std::vector<MultiPoly> groebner_basis(std::vector<MultiPoly> gens);

/// dim_Q of degree-d part of Q[x_1..n]/I, I given by a Groebner basis.
long hilbert_function(const std::vector<MultiPoly>& gb, int d);

struct ProjectiveInvariants {
  int dimension;  // projective dimension; -1 for the empty scheme
  long degree;    // 0 for the empty scheme
};

/// Dimension and degree of Proj of the quotient by a homogeneous ideal,
/// read off the eventual Hilbert polynomial via finite differences.
ProjectiveInvariants projective_dim_degree(const std::vector<MultiPoly>& gb, int nvars);

/// Do all generators vanish at the point?
bool contains_point(const std::vector<MultiPoly>& gens, const std::vector<Rat>& point);

/// The C(m,4) Pluecker (Pfaffian) quadrics x_ij x_kl - x_ik x_jl + x_il x_jk
/// cutting out decomposable vectors in the wedge square of an m-dim space.
/// Variables are the C(m,2) coordinates x_ij, i<j, in lexicographic order.
std::vector<MultiPoly> grassmann_pfaffian_ideal(int m, MonoOrder ord);

/// Linear forms (in nvars coordinates) vanishing on the row span of `span`.
std::vector<MultiPoly> linear_ideal_of_subspace(const std::vector<std::vector<Rat>>& span,
                                                int nvars, MonoOrder ord);

}  // namespace toric
