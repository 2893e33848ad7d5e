// Poset of layers of a central toric arrangement, with poset isomorphism,
// join/meet sets, the four-atom partition property, and component groups of
// intersections with their projections.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// A layer is a connected component of an intersection of hypertori.  It is
/// stored canonically as the saturated lattice of characters constant on it
/// (rank = codimension) plus the value of each HNF basis character in Q/Z,
/// reduced into [0,1).  Two layers are equal iff the stored data agree.
class Layer {
 public:
  Layer(Lattice direction, std::vector<Rat> character);

  const Lattice& direction() const { return direction_; }
  const std::vector<Rat>& character() const { return character_; }
  int codim() const { return direction_.rank(); }
  int ambient_dim() const { return direction_.ambient_dim(); }

  bool operator==(const Layer& o) const = default;
  bool operator<(const Layer& o) const;  // arbitrary total order for dedupe

 private:
  Lattice direction_;
  std::vector<Rat> character_;
};

/// W1 <= W2 in the poset (reverse inclusion: W2 is contained in W1).
bool layer_leq(const Layer& w1, const Layer& w2);

/// Is the set-intersection of the two layers nonempty?
bool layers_intersect(const Layer& w1, const Layer& w2);

/// Connected components of the intersection of the hypertori indexed by S
/// (S empty gives the whole torus), sorted canonically.
std::vector<Layer> flat_components(const IntMatrix& N, const std::vector<int>& s);

struct LayerPoset {
  int ambient = 0;
  int n_atoms = 0;                       // number of hypertori
  std::vector<Layer> layers;             // sorted by (codim, canonical order)
  std::vector<std::vector<bool>> le;     // le[i][j] <=> layers[i] <= layers[j]

  std::vector<int> rank_profile() const;  // layer counts per codimension
  int index_of(const Layer& w) const;     // -1 if absent
};

LayerPoset enumerate_layers(const IntMatrix& N);

/// Minimal common upper bounds (the join set), as indices into the poset.
std::vector<int> min_upper_bounds(const LayerPoset& p, int a, int b);
/// Maximal common lower bounds, as indices.
std::vector<int> max_lower_bounds(const LayerPoset& p, int a, int b);

/// Order-preserving-and-reflecting bijection, or nullopt.  Backtracking with
/// iterated color refinement.
std::optional<std::vector<int>> poset_isomorphism(const LayerPoset& p1, const LayerPoset& p2);

struct PropertyPResult {
  bool holds = false;
  // when holds is false: the partition {i,j} | {k,l} whose components fail to meet
  std::vector<int> pair1, pair2;
};

/// Does every partition [4] = {i,j} u {k,l} have every component of
/// H_i n H_j meeting every component of H_k n H_l?  Requires 4 hypertori.
PropertyPResult property_p(const IntMatrix& N);

/// Component group of the intersection over I: characters of sat(G_I)/G_I.
struct ComponentGroup {
  FiniteAbelianGroup group;
  std::vector<std::vector<Rat>> elements;  // character vectors, sorted
};

ComponentGroup component_group(const IntMatrix& N, const std::vector<int>& I);

/// Restriction map LG(J) -> LG(I) for I subset of J, as element pairs.
std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> projection(
    const IntMatrix& N, const std::vector<int>& J, const std::vector<int>& I);

/// Kernel of LG(full ground set) -> LG(I), as a set of character vectors.
std::set<std::vector<Rat>> projection_kernel(const IntMatrix& N, const std::vector<int>& I);

/// Whether a group isomorphism of the full component groups can commute with
/// the two projections: holds iff the projection kernels coincide.
bool commuting_iso_exists(const IntMatrix& N, const std::vector<int>& I,
                          const std::vector<int>& J);

/// DOT rendering of the Hasse diagram, ranked by codimension.
std::string hasse_dot(const LayerPoset& p);

}  // namespace toric
