// The integral obstruction pipeline for the rank-2 family A_n^a: pull the
// resonance planes of the base arrangement back along the degree-n cyclic
// covering (t1, t2) -> (t1, t1^a t2^n), intersect with the integral first
// cohomology, and distinguish a = 1 from a = 2 by how the resulting
// sublattices sit inside the torus lattice.
#pragma once

#include <string>
#include <vector>

#include "toric/int_matrix.hpp"
#include "toric/lattice.hpp"

namespace toric {

/// Parameters of the covering: requires n >= 1, gcd(a, n) = gcd(a+1, n) = 1.
/// The non-isomorphism pipeline additionally wants n > 5 and gcd(n, 6) = 1.
struct CoveringSpec {
  long n;
  long a;

  /// Throws std::invalid_argument when the coprimality constraints fail.
  void validate() const;
  bool strong_hypotheses() const;  // n > 5 and gcd(n, 6) = 1
};

/// The pullback on degree one, written on the ordered bases
/// (w1, w2, w3, psi1, psi2) -> (w1, w2, w3, alpha, beta):
/// psi1 -> alpha, psi2 -> n beta + a alpha, w_i -> w_i.
/// Injective with determinant n.
IntMatrix pullback_matrix(const CoveringSpec& spec);

/// Integral first cohomology of the covering complement with its five
/// resonance sublattices, all in the basis (w1, w2, w3, alpha, beta).
struct H1Lattice {
  CoveringSpec spec;
  Lattice lattice;          // the full rank-5 lattice
  std::vector<Lattice> q;   // Q_1 .. Q_5, each of rank 2
};

/// Builds Q_1..Q_5 by intersecting the pulled-back resonance planes of the
/// base arrangement with the integral lattice, and checks the result
/// against the closed-form list
///   Q1 = <w1, alpha>,               Q2 = <w2, n beta + a alpha>,
///   Q3 = <w3, n beta + (a+1) alpha>, Q4 = <w1 - w3, w2 - w1 + alpha>,
///   Q5 = <w2 - w3, w1 - w2 + n beta + a alpha>.
H1Lattice build_h1_lattice(const CoveringSpec& spec);

/// Cardinality of the torsion subgroup of H^1 / <Q_i, Q_j>, indices 1..5.
/// Throws std::invalid_argument when i = j or out of range.
Int c_value(const H1Lattice& h, int i, int j);

/// {x in ambient | k x in l for some positive integer k}.
Lattice radical(const Lattice& l, const Lattice& ambient);

/// The torus lattice L = <alpha, beta>, recovered intrinsically as the
/// radical of the intersection of the <Q_i, Q_j> for 1 <= i < j <= 3.
Lattice torus_lattice(const H1Lattice& h);

/// Primitive generators of Q_i cap L for the requested indices (default
/// 1, 2, 3), in ambient coordinates.  Throws std::invalid_argument when
/// some Q_i cap L is not of rank 1 (e.g. index 4).
std::vector<std::vector<Int>> torus_line_generators(const H1Lattice& h,
                                                    const std::vector<int>& idx = {1, 2, 3});

/// Does some pair of lines admit signs with s v_i + t v_j in n L?
/// Exhaustive over the three pairs and four sign choices.
bool pair_sum_in_nL(const std::vector<std::vector<Int>>& lines, long n, const Lattice& l);

/// Everything the obstruction pipeline computed, plus the verdict.
struct ObstructionReport {
  long n;
  bool hypotheses_met;          // n > 5 and gcd(n, 6) = 1
  std::vector<std::vector<Int>> c_values_a1;  // 5x5, 0 on the diagonal
  std::vector<std::vector<Int>> c_values_a2;
  bool c_patterns_match;        // n at (1,2),(1,3),(2,3),(4,5); 1 elsewhere
  bool radical_recovers_torus;  // torus_lattice = <alpha, beta> for both
  std::vector<std::vector<Int>> lines_a1;  // Q_i cap L generators, i = 1,2,3
  std::vector<std::vector<Int>> lines_a2;
  bool pair_sum_a1;
  bool pair_sum_a2;
  bool obstruction;             // the two booleans differ
  std::string verdict;
};

/// Runs the full pipeline for a = 1 and a = 2.  When the hypotheses on n
/// fail the pipeline still runs diagnostically but the verdict is withheld.
ObstructionReport verify_non_isomorphism(long n);

}  // namespace toric
