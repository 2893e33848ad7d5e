#include "toric/cohom.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace toric {

namespace {

std::string join_subset(const std::vector<int>& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i] + 1);
  }
  return out;
}

}  // namespace

std::string GeneratorLabel::to_string() const {
  switch (kind) {
    case Kind::Psi:
      return "psi_" + std::to_string(index + 1);
    case Kind::OmegaSmall:
      return "omega_" + std::to_string(index + 1);
    case Kind::Torus:
      return "theta_" + std::to_string(index + 1);
    case Kind::OmegaBar:
      return "obar{" + join_subset(subset) + "}#" + std::to_string(component);
  }
  return "?";
}

CohomElement operator+(const CohomElement& a, const CohomElement& b) {
  if (a.terms.empty()) return b;
  if (b.terms.empty()) return a;
  assert(a.degree == b.degree);
  CohomElement out = a;
  for (const auto& [m, c] : b.terms) {
    Rat& slot = out.terms[m];
    slot += c;
    if (slot == 0) out.terms.erase(m);
  }
  return out;
}

CohomElement operator-(const CohomElement& a, const CohomElement& b) {
  return a + Rat(-1) * b;
}

CohomElement operator*(const Rat& c, const CohomElement& a) {
  CohomElement out;
  out.degree = a.degree;
  if (c == 0) return out;
  for (const auto& [m, v] : a.terms) out.terms.emplace(m, c * v);
  return out;
}

GradedAlgebraQ::GradedAlgebraQ(int top_degree, std::vector<GeneratorLabel> gens)
    : top_(top_degree), gens_(std::move(gens)) {
  odd_.reserve(gens_.size());
  for (const GeneratorLabel& g : gens_) odd_.push_back(g.degree % 2 == 1);
}

void GradedAlgebraQ::add_relation(CohomElement r) {
  if (r.terms.empty()) return;
  cache_.clear();
  relspace_.clear();
  rels_.push_back(std::move(r));
}

CohomElement GradedAlgebraQ::unit() const {
  CohomElement e;
  e.degree = 0;
  e.terms.emplace(CohomMono{}, Rat(1));
  return e;
}

CohomElement GradedAlgebraQ::generator(int g) const {
  CohomElement e;
  e.degree = gens_[g].degree;
  e.terms.emplace(CohomMono{{g, 1}}, Rat(1));
  return e;
}

int GradedAlgebraQ::find_generator(const GeneratorLabel& label) const {
  for (size_t g = 0; g < gens_.size(); ++g)
    if (gens_[g] == label) return static_cast<int>(g);
  return -1;
}

int GradedAlgebraQ::psi_index(int i) const {
  for (size_t g = 0; g < gens_.size(); ++g)
    if (gens_[g].kind == GeneratorLabel::Kind::Psi && gens_[g].index == i)
      return static_cast<int>(g);
  return -1;
}

int GradedAlgebraQ::omega_index(int i) const {
  for (size_t g = 0; g < gens_.size(); ++g)
    if (gens_[g].kind == GeneratorLabel::Kind::OmegaSmall && gens_[g].index == i)
      return static_cast<int>(g);
  return -1;
}

int GradedAlgebraQ::omegabar_index(const std::vector<int>& subset, int component) const {
  for (size_t g = 0; g < gens_.size(); ++g)
    if (gens_[g].kind == GeneratorLabel::Kind::OmegaBar && gens_[g].subset == subset &&
        gens_[g].component == component)
      return static_cast<int>(g);
  return -1;
}

// Normal-form product of two monomials.  Appends the items of b into a,
// counting the odd generators of a that each odd item of b has to jump over.
// Returns false when an odd generator repeats (the product is zero).
bool GradedAlgebraQ::mono_mul(const CohomMono& a, const CohomMono& b, CohomMono& out,
                              int& sign) const {
  out = a;
  sign = 1;
  for (const auto& [g, e] : b) {
    if (odd_[g]) {
      int jumped = 0;
      for (const auto& [h, f] : a)
        if (h > g && odd_[h]) jumped += f;
      if (jumped % 2) sign = -sign;
    }
    auto it = std::lower_bound(out.begin(), out.end(), std::make_pair(g, 0));
    if (it != out.end() && it->first == g) {
      if (odd_[g]) return false;
      it->second += e;
    } else {
      out.insert(it, {g, e});
    }
  }
  return true;
}

CohomElement GradedAlgebraQ::multiply(const CohomElement& x, const CohomElement& y) const {
  CohomElement out;
  out.degree = x.degree + y.degree;
  if (out.degree > top_) return out;  // vanishes above the top degree
  for (const auto& [mx, cx] : x.terms)
    for (const auto& [my, cy] : y.terms) {
      CohomMono m;
      int sign = 1;
      if (!mono_mul(mx, my, m, sign)) continue;
      Rat& slot = out.terms[m];
      slot += sign * cx * cy;
      if (slot == 0) out.terms.erase(m);
    }
  return out;
}

const GradedAlgebraQ::DegreeCache& GradedAlgebraQ::degree_cache(int d) const {
  DegreeCache& dc = cache_[d];
  if (dc.built) return dc;
  CohomMono cur;
  // Enumerate normal-form monomials of total degree d over ascending
  // generators; odd generators carry exponent at most 1.
  auto rec = [&](auto&& self, int start, int remaining) -> void {
    if (remaining == 0) {
      dc.basis.push_back(cur);
      return;
    }
    for (int g = start; g < static_cast<int>(gens_.size()); ++g) {
      int dg = gens_[g].degree;
      if (dg > remaining) continue;
      int max_e = odd_[g] ? 1 : remaining / dg;
      for (int e = 1; e <= max_e; ++e) {
        cur.push_back({g, e});
        self(self, g + 1, remaining - e * dg);
        cur.pop_back();
      }
    }
  };
  if (d >= 0) rec(rec, 0, d);
  for (size_t i = 0; i < dc.basis.size(); ++i) dc.index.emplace(dc.basis[i], static_cast<int>(i));
  dc.built = true;
  return dc;
}

const std::vector<CohomMono>& GradedAlgebraQ::monomial_basis(int d) const {
  return degree_cache(d).basis;
}

std::vector<Rat> GradedAlgebraQ::coordinates(const CohomElement& x) const {
  const DegreeCache& dc = degree_cache(x.degree);
  std::vector<Rat> v(dc.basis.size());
  for (const auto& [m, c] : x.terms) {
    auto it = dc.index.find(m);
    assert(it != dc.index.end());
    v[it->second] = c;
  }
  return v;
}

const EchelonBasis& GradedAlgebraQ::relation_space(int d) const {
  auto it = relspace_.find(d);
  if (it != relspace_.end()) return it->second;
  const DegreeCache& dc = degree_cache(d);
  EchelonBasis eb(static_cast<int>(dc.basis.size()));
  for (const CohomElement& rel : rels_) {
    if (rel.degree > d) continue;
    for (const CohomMono& m : monomial_basis(d - rel.degree)) {
      CohomElement mono_elem;
      mono_elem.degree = d - rel.degree;
      mono_elem.terms.emplace(m, Rat(1));
      eb.insert(coordinates(multiply(rel, mono_elem)));
    }
  }
  return relspace_.emplace(d, std::move(eb)).first->second;
}

int GradedAlgebraQ::graded_dimension(int d) const {
  if (d < 0) return 0;
  return static_cast<int>(monomial_basis(d).size()) - relation_space(d).rank();
}

std::vector<int> GradedAlgebraQ::graded_dimensions() const {
  std::vector<int> dims;
  for (int d = 0; d <= top_; ++d) dims.push_back(graded_dimension(d));
  return dims;
}

bool GradedAlgebraQ::is_zero(const CohomElement& x) const {
  if (x.terms.empty()) return true;
  if (x.degree > top_) return true;
  return relation_space(x.degree).in_span(coordinates(x));
}

std::vector<Rat> GradedAlgebraQ::reduced_coordinates(const CohomElement& x) const {
  return relation_space(x.degree).reduce(coordinates(x));
}

int GradedAlgebraQ::map_rank(const CohomElement& alpha, int d) const {
  EchelonBasis eb = relation_space(d + alpha.degree);
  int base = eb.rank();
  for (const CohomMono& m : monomial_basis(d)) {
    CohomElement rep;
    rep.degree = d;
    rep.terms.emplace(m, Rat(1));
    eb.insert(coordinates(multiply(alpha, rep)));
  }
  return eb.rank() - base;
}

int GradedAlgebraQ::multiplication_rank(int p, int q) const {
  EchelonBasis eb = relation_space(p + q);  // copy; products are ranked modulo it
  int base = eb.rank();
  for (const CohomMono& mp : monomial_basis(p))
    for (const CohomMono& mq : monomial_basis(q)) {
      CohomMono m;
      int sign = 1;
      if (!mono_mul(mp, mq, m, sign)) continue;
      CohomElement prod;
      prod.degree = p + q;
      prod.terms.emplace(m, Rat(sign));
      eb.insert(coordinates(prod));
    }
  return eb.rank() - base;
}

IntMatrix GradedAlgebraQ::integral_relation_rows(int d) const {
  const DegreeCache& dc = degree_cache(d);
  std::vector<std::vector<Int>> rows;
  for (const CohomElement& rel : rels_) {
    if (rel.degree > d) continue;
    for (const CohomMono& m : monomial_basis(d - rel.degree)) {
      CohomElement mono_elem;
      mono_elem.degree = d - rel.degree;
      mono_elem.terms.emplace(m, Rat(1));
      CohomElement prod = multiply(rel, mono_elem);
      std::vector<Int> row(dc.basis.size());
      for (const auto& [pm, c] : prod.terms) {
        assert(c.get_den() == 1);
        row[dc.index.at(pm)] = c.get_num();
      }
      rows.push_back(std::move(row));
    }
  }
  IntMatrix out(static_cast<int>(rows.size()), static_cast<int>(dc.basis.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) out.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return out;
}

namespace {

std::vector<GeneratorLabel> torus_complement_generators(int r, int rk) {
  std::vector<GeneratorLabel> out;
  for (int j = 0; j < r - rk; ++j) {
    GeneratorLabel t;
    t.kind = GeneratorLabel::Kind::Torus;
    t.index = j;
    out.push_back(t);
  }
  return out;
}

}  // namespace

GradedAlgebraQ build_unimodular_presentation(const IntMatrix& n) {
  if (!is_totally_unimodular(n))
    throw std::invalid_argument(
        "arrangement is not totally unimodular; use the rational presentation");
  const int r = n.rows();
  const int cols = n.cols();
  const int rk = rank(n);

  std::vector<GeneratorLabel> gens;
  for (int i = 0; i < cols; ++i) {
    GeneratorLabel w;
    w.kind = GeneratorLabel::Kind::OmegaSmall;
    w.index = i;
    gens.push_back(w);
  }
  for (int i = 0; i < cols; ++i) {
    GeneratorLabel p;
    p.kind = GeneratorLabel::Kind::Psi;
    p.index = i;
    gens.push_back(p);
  }
  for (GeneratorLabel& t : torus_complement_generators(r, rk)) gens.push_back(t);

  GradedAlgebraQ alg(r, std::move(gens));

  for (int i = 0; i < cols; ++i)
    alg.add_relation(alg.multiply(alg.generator(alg.omega_index(i)), alg.generator(alg.psi_index(i))));

  for (const std::vector<int>& circuit : circuits(n)) {
    std::vector<Int> dep = primitive_dependency(n, circuit);
    const int len = static_cast<int>(circuit.size());
    for (int flip = 0; flip < 2; ++flip) {
      std::vector<int> c(len);
      for (int m = 0; m < len; ++m) {
        assert(dep[m] == 1 || dep[m] == -1);
        c[m] = (dep[m] > 0 ? 1 : -1) * (flip ? -1 : 1);
      }
      if (!flip) {
        CohomElement lin;
        lin.degree = 1;
        for (int m = 0; m < len; ++m)
          lin = lin + Rat(c[m]) * alg.generator(alg.psi_index(circuit[m]));
        alg.add_relation(lin);
      }
      // gamma_m = omega_{i_m} + sum_{l<m} c_l psi_{i_l} - [c_m < 0] psi_{i_m}
      std::vector<CohomElement> gamma(len);
      CohomElement prefix;
      prefix.degree = 1;
      for (int m = 0; m < len; ++m) {
        gamma[m] = alg.generator(alg.omega_index(circuit[m])) + prefix;
        if (c[m] < 0) gamma[m] = gamma[m] - alg.generator(alg.psi_index(circuit[m]));
        prefix = prefix + Rat(c[m]) * alg.generator(alg.psi_index(circuit[m]));
      }
      CohomElement prod = alg.unit();
      for (int m = 1; m < len; ++m) prod = alg.multiply(prod, gamma[m] - gamma[0]);
      alg.add_relation(prod);
    }
  }
  return alg;
}

namespace {

// The unique component of the flat of S containing the layer L (the unit
// position -1 when S is empty).
int containing_component(const std::vector<Layer>& comps, const Layer& l) {
  for (size_t c = 0; c < comps.size(); ++c)
    if (layer_leq(comps[c], l)) return static_cast<int>(c);
  return -1;
}

// Parity of the permutation merging sorted s before sorted t: the number of
// pairs (x in s, y in t) with x > y, mod 2.
int merge_parity(const std::vector<int>& s, const std::vector<int>& t) {
  int inv = 0;
  for (int x : s)
    for (int y : t)
      if (x > y) ++inv;
  return inv % 2;
}

}  // namespace

GradedAlgebraQ build_rational_presentation(const IntMatrix& n, int generator_guard) {
  const int r = n.rows();
  const int cols = n.cols();
  const int rk = rank(n);

  // Flats of independent subsets, keyed by the sorted subset.
  std::map<std::vector<int>, std::vector<Layer>> flats;
  flats.emplace(std::vector<int>{}, flat_components(n, {}));
  std::vector<std::vector<int>> independent;  // nonempty, by (size, lex)
  for (int size = 1; size <= std::min(r, cols); ++size) {
    std::vector<int> s(size);
    auto rec = [&](auto&& self, int pos, int start) -> void {
      if (pos == size) {
        if (rank(n.columns(s)) == size) {
          independent.push_back(s);
          flats.emplace(s, flat_components(n, s));
        }
        return;
      }
      for (int i = start; i < cols; ++i) {
        s[pos] = i;
        self(self, pos + 1, i + 1);
      }
    };
    rec(rec, 0, 0);
  }

  std::vector<GeneratorLabel> gens;
  for (int i = 0; i < cols; ++i) {
    GeneratorLabel p;
    p.kind = GeneratorLabel::Kind::Psi;
    p.index = i;
    gens.push_back(p);
  }
  for (GeneratorLabel& t : torus_complement_generators(r, rk)) gens.push_back(t);
  std::sort(independent.begin(), independent.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  for (const std::vector<int>& s : independent) {
    const std::vector<Layer>& comps = flats.at(s);
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
      GeneratorLabel w;
      w.kind = GeneratorLabel::Kind::OmegaBar;
      w.subset = s;
      w.component = c;
      w.degree = static_cast<int>(s.size());
      gens.push_back(w);
    }
  }
  if (static_cast<int>(gens.size()) > generator_guard)
    throw std::length_error("rational presentation generator guard exceeded (" +
                            std::to_string(gens.size()) + " generators)");

  GradedAlgebraQ alg(r, std::move(gens));
  const std::vector<GeneratorLabel>& glist = alg.generators();
  std::vector<int> obar_gens;
  for (int g = 0; g < static_cast<int>(glist.size()); ++g)
    if (glist[g].kind == GeneratorLabel::Kind::OmegaBar) obar_gens.push_back(g);

  // Family 1: omegabar_{W,S} psi_i = 0 for i in S.
  for (int g : obar_gens) {
    if (glist[g].degree + 1 > r) continue;
    for (int i : glist[g].subset)
      alg.add_relation(alg.multiply(alg.generator(g), alg.generator(alg.psi_index(i))));
  }

  // Family 2: pairwise omegabar products, rewritten or zero.
  for (size_t a = 0; a < obar_gens.size(); ++a) {
    for (size_t b = a; b < obar_gens.size(); ++b) {
      const GeneratorLabel& ga = glist[obar_gens[a]];
      const GeneratorLabel& gb = glist[obar_gens[b]];
      if (a == b && ga.degree % 2 == 1) continue;  // odd squares vanish identically
      const int deg = ga.degree + gb.degree;
      if (deg > r) continue;
      CohomElement lhs = alg.multiply(alg.generator(obar_gens[a]), alg.generator(obar_gens[b]));
      std::vector<int> u;
      std::set_union(ga.subset.begin(), ga.subset.end(), gb.subset.begin(), gb.subset.end(),
                     std::back_inserter(u));
      bool transverse = static_cast<int>(u.size()) == deg && rank(n.columns(u)) == deg;
      if (!transverse) {
        alg.add_relation(lhs);
        continue;
      }
      auto it = flats.find(u);
      if (it == flats.end()) it = flats.emplace(u, flat_components(n, u)).first;
      const Layer& wa = flats.at(ga.subset)[ga.component];
      const Layer& wb = flats.at(gb.subset)[gb.component];
      CohomElement rhs;
      rhs.degree = deg;
      for (int c = 0; c < static_cast<int>(it->second.size()); ++c)
        if (layer_leq(wa, it->second[c]) && layer_leq(wb, it->second[c]))
          rhs = rhs + alg.generator(alg.omegabar_index(u, c));
      int l = merge_parity(ga.subset, gb.subset);
      alg.add_relation(lhs - Rat(l % 2 ? -1 : 1) * rhs);
    }
  }

  // Families 3 and 4, from circuits.  The degree-(|I|-1) relation family is
  // emitted for every superset I of a circuit (the circuit's dependency
  // extended by zeros): terms whose psi-part meets a zero coefficient drop
  // out, and so do terms whose omegabar subset is dependent.
  auto memo_comps = [&flats, &n](const std::vector<int>& s) -> const std::vector<Layer>& {
    auto it = flats.find(s);
    if (it == flats.end()) it = flats.emplace(s, flat_components(n, s)).first;
    return it->second;
  };

  for (const std::vector<int>& circuit : circuits(n)) {
    const int len = static_cast<int>(circuit.size());

    CohomElement lin;
    lin.degree = 1;
    std::vector<Int> dep_on(cols, 0);  // dependency by column index
    {
      std::vector<Int> dep = primitive_dependency(n, circuit);
      for (int m = 0; m < len; ++m) {
        dep_on[circuit[m]] = dep[m];
        lin = lin + Rat(dep[m]) * alg.generator(alg.psi_index(circuit[m]));
      }
    }
    alg.add_relation(lin);

    // Supersets of the circuit, bounded by the relation degree.
    std::vector<int> extra;
    for (int i = 0; i < cols; ++i)
      if (!std::binary_search(circuit.begin(), circuit.end(), i)) extra.push_back(i);
    const int max_extra = std::min<int>(static_cast<int>(extra.size()), r + 1 - (len - 1));
    for (int ecount = 0; ecount <= max_extra; ++ecount) {
      std::vector<int> chosen(ecount);
      auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos < ecount) {
          for (int i = start; i < static_cast<int>(extra.size()); ++i) {
            chosen[pos] = extra[i];
            self(self, pos + 1, i + 1);
          }
          return;
        }
        std::vector<int> iset = circuit;
        iset.insert(iset.end(), chosen.begin(), chosen.end());
        std::sort(iset.begin(), iset.end());
        const int ilen = static_cast<int>(iset.size());
        for (const Layer& l : memo_comps(iset)) {
          CohomElement rel;
          rel.degree = ilen - 1;
          for (int p = 0; p < ilen; ++p) {
            const int removed = iset[p];
            std::vector<int> rest;
            for (int m = 0; m < ilen; ++m)
              if (m != p) rest.push_back(iset[m]);
            const long m_rest = static_cast<long>(memo_comps(rest).size());
            // T runs over even subsets of rest avoiding zero coefficients;
            // S is the complement within rest and must be independent.
            const int rlen = ilen - 1;
            for (int mask = 0; mask < (1 << rlen); ++mask) {
              if (__builtin_popcount(static_cast<unsigned>(mask)) % 2) continue;
              std::vector<int> s, t;
              int c_t = 1;
              bool dead = false;
              for (int m = 0; m < rlen; ++m) {
                if (mask & (1 << m)) {
                  if (dep_on[rest[m]] == 0) {
                    dead = true;
                    break;
                  }
                  t.push_back(rest[m]);
                  if (dep_on[rest[m]] < 0) c_t = -c_t;
                } else {
                  s.push_back(rest[m]);
                }
              }
              if (dead) continue;
              if (!s.empty() && rank(n.columns(s)) < static_cast<int>(s.size()))
                continue;  // no generator for a dependent subset
              const std::vector<Layer>& scomps = memo_comps(s);
              int wc = containing_component(scomps, l);
              assert(s.empty() || wc >= 0);
              int s_before = 0;
              for (int x : s)
                if (x < removed) ++s_before;
              int sign = ((s_before + merge_parity(s, t)) % 2) ? -1 : 1;
              Rat coeff =
                  Rat(sign * c_t) * Rat(static_cast<long>(scomps.size()), m_rest);
              coeff.canonicalize();
              CohomElement term =
                  s.empty() ? alg.unit() : alg.generator(alg.omegabar_index(s, wc));
              for (int x : t) term = alg.multiply(term, alg.generator(alg.psi_index(x)));
              rel = rel + coeff * term;
            }
          }
          alg.add_relation(rel);
        }
      };
      rec(rec, 0, 0);
    }
  }
  return alg;
}

GradedAlgebraQ quotient_by_torus_ideal(const GradedAlgebraQ& a) {
  GradedAlgebraQ out(a.top_degree(), a.generators());
  for (const CohomElement& rel : a.relations()) out.add_relation(rel);
  for (int g = 0; g < static_cast<int>(a.generators().size()); ++g)
    if (a.generators()[g].kind == GeneratorLabel::Kind::Psi) out.add_relation(out.generator(g));
  return out;
}

ZModule integral_graded_unimodular(const IntMatrix& n, int k) {
  GradedAlgebraQ alg = build_unimodular_presentation(n);
  // Z^{F_k} modulo the row span of the relation multiples.
  IntMatrix rows = alg.integral_relation_rows(k);
  Cokernel ck = cokernel(rows.transpose());
  ZModule out;
  out.free_rank = ck.free_rank;
  out.torsion = ck.torsion;
  return out;
}

}  // namespace toric
