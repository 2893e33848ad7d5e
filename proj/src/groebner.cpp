#include "toric/groebner.hpp"

#include <cassert>

#include "toric/qlinalg.hpp"

namespace toric {

namespace {

std::vector<Mono> minimalize(std::vector<Mono> g) {
  std::vector<Mono> out;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j)
      if (i != j && mono_divides(g[j], g[i]) && (g[j] != g[i] || j < i)) redundant = true;
    if (!redundant) out.push_back(g[i]);
  }
  return out;
}

Int binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Monomials of degree d in nvars variables divisible by no element of g.
// Counts are exact (GMP): ambient binomials overflow machine words well
// before the quotients of interest stabilise.  Expects g minimalized.
Int count_standard(const std::vector<Mono>& g, int d, int nvars) {
  if (d < 0) return 0;
  // A single-variable generator bans its variable outright; after
  // minimalization that variable occurs in no other generator, so the
  // count just lives in one fewer variable.
  std::vector<Mono> rest;
  for (const Mono& m : g) {
    int deg = mono_deg(m);
    if (deg == 0) return 0;
    if (deg == 1)
      --nvars;
    else
      rest.push_back(m);
  }
  if (rest.empty()) return binom(d + nvars - 1, nvars - 1);
  Mono pick = rest.back();
  rest.pop_back();
  Int without = count_standard(rest, d, nvars);
  // monomials divisible by `pick` but by nothing in `rest`:
  // pick * m' with m' avoiding the colon generators rest : pick
  std::vector<Mono> colon;
  for (const Mono& h : rest) {
    Mono q(h.size());
    for (size_t i = 0; i < h.size(); ++i) q[i] = std::max(h[i] - pick[i], 0);
    colon.push_back(q);
  }
  return without - count_standard(minimalize(colon), d - mono_deg(pick), nvars);
}

}  // namespace

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
  MultiPoly p = f;
  MultiPoly r(f.nvars(), f.order());
  while (!p.is_zero()) {
    Mono lm = p.leading_mono();
    Rat lc = p.coeff(lm);
    const MultiPoly* divisor = nullptr;
    for (const MultiPoly& g : basis)
      if (!g.is_zero() && mono_divides(g.leading_mono(), lm)) { divisor = &g; break; }
    if (divisor) {
      p = p - divisor->times_mono(mono_quot(lm, divisor->leading_mono()), lc / divisor->leading_coeff());
    } else {
      r.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return r;
}

std::vector<MultiPoly> groebner_basis(std::vector<MultiPoly> gens) {
  if (gens.empty()) return {};
  int nvars = gens[0].nvars();
  MonoOrder ord = gens[0].order();

  std::vector<MultiPoly> linear, rest;
  for (MultiPoly& g : gens) {
    if (g.is_zero()) continue;
    if (g.total_degree() == 0) return {MultiPoly::constant(nvars, 1, ord)};
    (g.total_degree() == 1 ? linear : rest).push_back(std::move(g));
  }

  // echelonize the linear forms: distinct leading variables, back-substituted
  std::vector<MultiPoly> echelon;
  for (MultiPoly f : linear) {
    f = normal_form(f, echelon);
    if (f.is_zero()) continue;
    if (f.total_degree() == 0) return {MultiPoly::constant(nvars, 1, ord)};
    echelon.push_back(f.monic());
    for (size_t i = 0; i + 1 < echelon.size(); ++i)
      echelon[i] = normal_form(echelon[i], {echelon.back()});
  }
  for (MultiPoly& g : rest) g = normal_form(g, echelon);

  // Buchberger on the eliminated generators
  std::vector<MultiPoly> gb;
  for (MultiPoly& g : rest)
    if (!g.is_zero()) gb.push_back(g.monic());
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < gb.size(); ++i)
    for (size_t j = i + 1; j < gb.size(); ++j) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    Mono li = gb[i].leading_mono(), lj = gb[j].leading_mono();
    Mono l = mono_lcm(li, lj);
    if (l == mono_mul(li, lj)) continue;  // coprime leading terms
    MultiPoly s = gb[i].times_mono(mono_quot(l, li), 1) - gb[j].times_mono(mono_quot(l, lj), 1);
    s = normal_form(s, gb);
    if (s.is_zero()) continue;
    if (s.total_degree() <= 1) {
      // rare degree drop: fold everything together and redo the elimination
      std::vector<MultiPoly> all = echelon;
      all.insert(all.end(), gb.begin(), gb.end());
      all.push_back(s);
      return groebner_basis(std::move(all));
    }
    gb.push_back(s.monic());
    for (size_t k = 0; k + 1 < gb.size(); ++k) pairs.emplace_back(k, gb.size() - 1);
  }

  // reduce: drop redundant leading terms, then tail-reduce
  std::vector<MultiPoly> merged = echelon;
  merged.insert(merged.end(), gb.begin(), gb.end());
  std::vector<MultiPoly> reduced;
  for (size_t i = 0; i < merged.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < merged.size() && !redundant; ++j) {
      if (i == j) continue;
      if (mono_divides(merged[j].leading_mono(), merged[i].leading_mono()) &&
          (merged[j].leading_mono() != merged[i].leading_mono() || j < i))
        redundant = true;
    }
    if (!redundant) reduced.push_back(merged[i]);
  }
  for (size_t i = 0; i < reduced.size(); ++i) {
    std::vector<MultiPoly> others;
    for (size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    Mono lm = reduced[i].leading_mono();
    MultiPoly tail = reduced[i];
    tail.add_term(lm, -tail.coeff(lm));
    MultiPoly nf = normal_form(tail, others);
    MultiPoly out(nvars, ord);
    out.add_term(lm, 1);
    reduced[i] = out + nf.scaled(1 / reduced[i].leading_coeff());
  }
  return reduced;
}

long hilbert_function(const std::vector<MultiPoly>& gb, int d) {
  if (gb.empty()) return 0;
  int nvars = gb[0].nvars();
  std::vector<Mono> lts;
  for (const MultiPoly& g : gb)
    if (!g.is_zero()) lts.push_back(g.leading_mono());
  Int c = count_standard(minimalize(lts), d, nvars);
  assert(c.fits_slong_p());
  return c.get_si();
}

ProjectiveInvariants projective_dim_degree(const std::vector<MultiPoly>& gb, int nvars) {
  int maxdeg = 0;
  for (const MultiPoly& g : gb)
    if (!g.is_zero()) maxdeg += g.total_degree();
  int window = std::max(4, nvars + 1);
  int top = nvars + maxdeg + window + 2;
  std::vector<Mono> lts;
  for (const MultiPoly& g : gb)
    if (!g.is_zero()) lts.push_back(g.leading_mono());
  lts = minimalize(lts);
  std::vector<Int> seq;
  for (int d = 0; d <= top; ++d)
    seq.push_back(gb.empty() ? binom(d + nvars - 1, nvars - 1)
                             : count_standard(lts, d, nvars));
  for (int k = 0; k <= nvars; ++k) {
    bool constant = true;
    for (size_t i = seq.size() - window; i + 1 < seq.size(); ++i)
      if (seq[i] != seq[i + 1]) { constant = false; break; }
    if (constant) {
      const Int& c = seq.back();
      if (c == 0) return {-1, 0};
      assert(c.fits_slong_p());
      return {k, c.get_si()};
    }
    std::vector<Int> next;
    for (size_t i = 0; i + 1 < seq.size(); ++i) next.push_back(seq[i + 1] - seq[i]);
    seq = std::move(next);
  }
  assert(false && "hilbert function did not stabilize");
  return {-1, 0};
}

bool contains_point(const std::vector<MultiPoly>& gens, const std::vector<Rat>& point) {
  for (const MultiPoly& g : gens)
    if (g.evaluate(point) != 0) return false;
  return true;
}

std::vector<MultiPoly> grassmann_pfaffian_ideal(int m, MonoOrder ord) {
  int nv = m * (m - 1) / 2;
  auto idx = [m](int i, int j) {  // i < j
    return i * (2 * m - i - 1) / 2 + (j - i - 1);
  };
  std::vector<MultiPoly> out;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k)
        for (int l = k + 1; l < m; ++l) {
          MultiPoly q(nv, ord);
          auto term = [&](int a, int b, int c, int d, int sign) {
            Mono mo(nv, 0);
            ++mo[idx(a, b)];
            ++mo[idx(c, d)];
            q.add_term(mo, sign);
          };
          term(i, j, k, l, 1);
          term(i, k, j, l, -1);
          term(i, l, j, k, 1);
          out.push_back(q);
        }
  return out;
}

std::vector<MultiPoly> linear_ideal_of_subspace(const std::vector<std::vector<Rat>>& span,
                                                int nvars, MonoOrder ord) {
  QMatrix m(static_cast<int>(span.size()), nvars);
  for (size_t i = 0; i < span.size(); ++i)
    for (int j = 0; j < nvars; ++j) m.at(static_cast<int>(i), j) = span[i][j];
  std::vector<MultiPoly> out;
  for (const auto& v : qkernel(m)) {
    MultiPoly f(nvars, ord);
    for (int j = 0; j < nvars; ++j) {
      Mono mo(nvars, 0);
      mo[j] = 1;
      f.add_term(mo, v[j]);
    }
    out.push_back(f);
  }
  return out;
}

}  // namespace toric
