#include "toric/layers.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace toric {

namespace {

// representative of q + Z in [0, 1)
Rat frac(const Rat& q) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return q - Rat(fl);
}

// value of the character on a vector of the direction lattice
Rat character_value(const Layer& w, const std::vector<Int>& v) {
  auto c = w.direction().coordinates(v);
  assert(c.has_value());
  Rat val = 0;
  for (size_t j = 0; j < c->size(); ++j) val += Rat((*c)[j]) * w.character()[j];
  return frac(val);
}

Lattice column_span(const IntMatrix& N, const std::vector<int>& s) {
  return Lattice(N.rows(), N.columns(s).transpose());
}

// characters of sat/gamma as value vectors on the HNF basis of sat
std::vector<std::vector<Rat>> quotient_characters(const Lattice& gamma, const Lattice& sat) {
  int k = gamma.rank();
  IntMatrix c(k, k);
  for (int i = 0; i < k; ++i) {
    auto coords = sat.coordinates(gamma.basis().row(i));
    assert(coords.has_value());
    for (int j = 0; j < k; ++j) c.at(i, j) = (*coords)[j];
  }
  auto s = snf(c);
  assert(static_cast<int>(s.diag.size()) == k);
  std::vector<std::vector<Rat>> out;
  std::vector<Int> counter(k, 0);
  while (true) {
    // y = V z with z_i = counter_i / d_i solves (gamma basis) . y in Z^k
    std::vector<Rat> y(k, 0);
    for (int t = 0; t < k; ++t) {
      Rat val = 0;
      for (int i = 0; i < k; ++i) {
        Rat step(counter[i], s.diag[i]);
        step.canonicalize();
        val += Rat(s.right.at(t, i)) * step;
      }
      y[t] = frac(val);
    }
    out.push_back(std::move(y));
    int pos = k - 1;
    while (pos >= 0 && ++counter[pos] == s.diag[pos]) counter[pos--] = 0;
    if (pos < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Layer::Layer(Lattice direction, std::vector<Rat> character)
    : direction_(std::move(direction)), character_(std::move(character)) {
  assert(static_cast<int>(character_.size()) == direction_.rank());
  for (Rat& q : character_) q = frac(q);
}

bool Layer::operator<(const Layer& o) const {
  if (codim() != o.codim()) return codim() < o.codim();
  const IntMatrix &a = direction_.basis(), &b = o.direction_.basis();
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != b.at(i, j)) return a.at(i, j) < b.at(i, j);
  return character_ < o.character_;
}

bool layer_leq(const Layer& w1, const Layer& w2) {
  assert(w1.ambient_dim() == w2.ambient_dim());
  if (!w2.direction().contains(w1.direction())) return false;
  for (int i = 0; i < w1.codim(); ++i) {
    std::vector<Int> row = w1.direction().basis().row(i);
    if (character_value(w2, row) != w1.character()[i]) return false;
  }
  return true;
}

bool layers_intersect(const Layer& w1, const Layer& w2) {
  Lattice common = intersect(w1.direction(), w2.direction());
  for (int i = 0; i < common.rank(); ++i) {
    std::vector<Int> row = common.basis().row(i);
    if (character_value(w1, row) != character_value(w2, row)) return false;
  }
  return true;
}

std::vector<Layer> flat_components(const IntMatrix& N, const std::vector<int>& s) {
  Lattice gamma = column_span(N, s);
  Lattice sat = saturation(gamma);
  std::vector<Layer> out;
  for (auto& y : quotient_characters(gamma, sat)) out.emplace_back(sat, std::move(y));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> LayerPoset::rank_profile() const {
  int top = 0;
  for (const Layer& w : layers) top = std::max(top, w.codim());
  std::vector<int> profile(top + 1, 0);
  for (const Layer& w : layers) ++profile[w.codim()];
  return profile;
}

int LayerPoset::index_of(const Layer& w) const {
  auto it = std::lower_bound(layers.begin(), layers.end(), w);
  if (it == layers.end() || !(*it == w)) return -1;
  return static_cast<int>(it - layers.begin());
}

LayerPoset enumerate_layers(const IntMatrix& N) {
  int n = N.cols();
  std::set<Layer> all;
  for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (size_t(1) << i)) idx.push_back(i);
    for (Layer& w : flat_components(N, idx)) all.insert(std::move(w));
  }
  LayerPoset p;
  p.ambient = N.rows();
  p.n_atoms = n;
  p.layers.assign(all.begin(), all.end());
  size_t m = p.layers.size();
  p.le.assign(m, std::vector<bool>(m, false));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) p.le[i][j] = layer_leq(p.layers[i], p.layers[j]);
  return p;
}

std::vector<int> min_upper_bounds(const LayerPoset& p, int a, int b) {
  std::vector<int> ub;
  for (size_t w = 0; w < p.layers.size(); ++w)
    if (p.le[a][w] && p.le[b][w]) ub.push_back(static_cast<int>(w));
  std::vector<int> out;
  for (int w : ub) {
    bool minimal = true;
    for (int v : ub)
      if (v != w && p.le[v][w]) { minimal = false; break; }
    if (minimal) out.push_back(w);
  }
  return out;
}

std::vector<int> max_lower_bounds(const LayerPoset& p, int a, int b) {
  std::vector<int> lb;
  for (size_t w = 0; w < p.layers.size(); ++w)
    if (p.le[w][a] && p.le[w][b]) lb.push_back(static_cast<int>(w));
  std::vector<int> out;
  for (int w : lb) {
    bool maximal = true;
    for (int v : lb)
      if (v != w && p.le[w][v]) { maximal = false; break; }
    if (maximal) out.push_back(w);
  }
  return out;
}

namespace {

// sizes of the join sets, an order-derived pairwise invariant that refines
// much harder than up/down degrees alone
std::vector<std::vector<int>> join_size_matrix(const LayerPoset& p) {
  size_t m = p.layers.size();
  std::vector<std::vector<int>> js(m, std::vector<int>(m, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i; j < m; ++j) {
      int s = static_cast<int>(min_upper_bounds(p, static_cast<int>(i), static_cast<int>(j)).size());
      js[i][j] = js[j][i] = s;
    }
  return js;
}

// joint iterated refinement; returns per-poset color vectors with shared ids
std::pair<std::vector<int>, std::vector<int>> refine_colors(
    const LayerPoset& p1, const LayerPoset& p2, const std::vector<std::vector<int>>& js1,
    const std::vector<std::vector<int>>& js2) {
  auto init = [](const LayerPoset& p) {
    std::vector<int> c;
    for (const Layer& w : p.layers) c.push_back(w.codim());
    return c;
  };
  std::vector<int> c1 = init(p1), c2 = init(p2);
  size_t classes = 1;
  while (true) {
    // signature: own color plus, per neighbor color, counts of the order
    // relation in both directions and the multiset of join-set sizes
    using Key = std::pair<int, std::pair<int, int>>;  // (neighbor color, (le, join size))
    using Sig = std::pair<int, std::vector<std::pair<Key, int>>>;
    auto signature = [](const LayerPoset& p, const std::vector<std::vector<int>>& js,
                        const std::vector<int>& c, size_t i) {
      std::map<Key, int> counts;
      for (size_t j = 0; j < p.layers.size(); ++j) {
        if (j == i) continue;
        int rel = (p.le[i][j] ? 1 : 0) + (p.le[j][i] ? 2 : 0);
        ++counts[{c[j], {rel, js[i][j]}}];
      }
      return Sig{c[i], {counts.begin(), counts.end()}};
    };
    std::map<Sig, int> ids;
    auto next = [&](const LayerPoset& p, const std::vector<std::vector<int>>& js,
                    const std::vector<int>& c) {
      std::vector<int> nc(p.layers.size());
      for (size_t i = 0; i < p.layers.size(); ++i)
        nc[i] = ids.emplace(signature(p, js, c, i), static_cast<int>(ids.size())).first->second;
      return nc;
    };
    std::vector<int> n1 = next(p1, js1, c1), n2 = next(p2, js2, c2);
    std::set<int> d1(n1.begin(), n1.end());
    if (d1.size() == classes) return {n1, n2};  // partition stable
    classes = d1.size();
    c1 = std::move(n1);
    c2 = std::move(n2);
  }
}

bool extend_isomorphism(const LayerPoset& p1, const LayerPoset& p2,
                        const std::vector<std::vector<int>>& js1,
                        const std::vector<std::vector<int>>& js2,
                        const std::vector<int>& order, size_t pos,
                        const std::vector<int>& c1, const std::vector<int>& c2,
                        std::vector<int>& map, std::vector<bool>& used) {
  if (pos == order.size()) return true;
  int i = order[pos];
  for (size_t j = 0; j < p2.layers.size(); ++j) {
    if (used[j] || c2[j] != c1[i]) continue;
    bool ok = true;
    for (size_t q = 0; q < pos && ok; ++q) {
      int k = order[q], m = map[k];
      if (p1.le[i][k] != p2.le[j][m] || p1.le[k][i] != p2.le[m][j] ||
          js1[i][k] != js2[j][m])
        ok = false;
    }
    if (!ok) continue;
    map[i] = static_cast<int>(j);
    used[j] = true;
    if (extend_isomorphism(p1, p2, js1, js2, order, pos + 1, c1, c2, map, used)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> poset_isomorphism(const LayerPoset& p1, const LayerPoset& p2) {
  if (p1.layers.size() != p2.layers.size()) return std::nullopt;
  if (p1.rank_profile() != p2.rank_profile()) return std::nullopt;
  auto js1 = join_size_matrix(p1), js2 = join_size_matrix(p2);
  auto [c1, c2] = refine_colors(p1, p2, js1, js2);
  std::map<int, int> h1, h2;
  for (int c : c1) ++h1[c];
  for (int c : c2) ++h2[c];
  if (h1 != h2) return std::nullopt;
  // map rare colors first
  std::vector<int> order(p1.layers.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return h1[c1[a]] != h1[c1[b]] ? h1[c1[a]] < h1[c1[b]] : a < b; });
  std::vector<int> map(p1.layers.size(), -1);
  std::vector<bool> used(p2.layers.size(), false);
  if (extend_isomorphism(p1, p2, js1, js2, order, 0, c1, c2, map, used)) return map;
  return std::nullopt;
}

PropertyPResult property_p(const IntMatrix& N) {
  assert(N.cols() == 4);
  // The property demands that for EVERY complementary pair partition
  // {i,j} | {k,l} of the four hypertori, each component of H_i n H_j meets
  // each component of H_k n H_l.  (An existential reading over partitions
  // fails to separate the two rank-3 examples: both then satisfy it.)
  // On failure the offending partition is returned as the witness.
  static const int partitions[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (const auto& q : partitions) {
    auto left = flat_components(N, {q[0], q[1]});
    auto right = flat_components(N, {q[2], q[3]});
    for (const Layer& a : left)
      for (const Layer& b : right)
        if (!layers_intersect(a, b)) return {false, {q[0], q[1]}, {q[2], q[3]}};
  }
  return {true, {}, {}};
}

ComponentGroup component_group(const IntMatrix& N, const std::vector<int>& I) {
  Lattice gamma = column_span(N, I);
  Lattice sat = saturation(gamma);
  ComponentGroup cg;
  cg.group = quotient_group(sat, gamma);
  cg.elements = quotient_characters(gamma, sat);
  return cg;
}

namespace {

std::vector<Rat> restrict_character(const Lattice& sat_from, const std::vector<Rat>& chi,
                                    const Lattice& sat_to) {
  std::vector<Rat> out;
  for (int i = 0; i < sat_to.rank(); ++i) {
    auto c = sat_from.coordinates(sat_to.basis().row(i));
    assert(c.has_value());
    Rat val = 0;
    for (size_t j = 0; j < c->size(); ++j) val += Rat((*c)[j]) * chi[j];
    Int fl;
    mpq_class q = val;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    out.push_back(val - Rat(fl));
  }
  return out;
}

}  // namespace

std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> projection(
    const IntMatrix& N, const std::vector<int>& J, const std::vector<int>& I) {
  Lattice satJ = saturation(column_span(N, J));
  Lattice satI = saturation(column_span(N, I));
  assert(satJ.contains(satI));
  std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> out;
  for (const auto& chi : component_group(N, J).elements)
    out.emplace_back(chi, restrict_character(satJ, chi, satI));
  return out;
}

std::set<std::vector<Rat>> projection_kernel(const IntMatrix& N, const std::vector<int>& I) {
  std::vector<int> full(N.cols());
  for (int i = 0; i < N.cols(); ++i) full[i] = i;
  std::set<std::vector<Rat>> out;
  for (auto& [chi, res] : projection(N, full, I)) {
    bool zero = true;
    for (const Rat& v : res)
      if (v != 0) { zero = false; break; }
    if (zero) out.insert(chi);
  }
  return out;
}

bool commuting_iso_exists(const IntMatrix& N, const std::vector<int>& I,
                          const std::vector<int>& J) {
  return projection_kernel(N, I) == projection_kernel(N, J);
}

std::string hasse_dot(const LayerPoset& p) {
  size_t m = p.layers.size();
  std::ostringstream os;
  os << "digraph layers {\n  rankdir=BT;\n";
  for (size_t i = 0; i < m; ++i)
    os << "  L" << i << " [label=\"L" << i << " (codim " << p.layers[i].codim() << ")\"];\n";
  int top = 0;
  for (const Layer& w : p.layers) top = std::max(top, w.codim());
  for (int c = 0; c <= top; ++c) {
    os << "  { rank=same;";
    for (size_t i = 0; i < m; ++i)
      if (p.layers[i].codim() == c) os << " L" << i << ";";
    os << " }\n";
  }
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      if (i == j || !p.le[i][j]) continue;
      bool cover = true;
      for (size_t k = 0; k < m && cover; ++k)
        if (k != i && k != j && p.le[i][k] && p.le[k][j]) cover = false;
      if (cover) os << "  L" << i << " -> L" << j << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace toric
