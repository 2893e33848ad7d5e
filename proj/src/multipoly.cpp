#include "toric/multipoly.hpp"

#include <cassert>
#include <sstream>

namespace toric {

int mono_deg(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

bool mono_divides(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Mono mono_quot(const Mono& b, const Mono& a) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] = b[i] - a[i];
    assert(r[i] >= 0);
  }
  return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool mono_less(const Mono& a, const Mono& b, MonoOrder ord) {
  if (ord == MonoOrder::lex) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
  // grevlex: compare total degree, then the rightmost differing exponent
  // (larger exponent there means smaller monomial)
  int da = mono_deg(a), db = mono_deg(b);
  if (da != db) return da < db;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

MultiPoly MultiPoly::variable(int nvars, int i, MonoOrder ord) {
  MultiPoly p(nvars, ord);
  Mono m(nvars, 0);
  m[i] = 1;
  p.add_term(m, 1);
  return p;
}

MultiPoly MultiPoly::constant(int nvars, const Rat& c, MonoOrder ord) {
  MultiPoly p(nvars, ord);
  p.add_term(Mono(nvars, 0), c);
  return p;
}

void MultiPoly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  Rat& slot = t_[m];
  slot += c;
  if (slot == 0) t_.erase(m);
}

Rat MultiPoly::coeff(const Mono& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rat(0) : it->second;
}

Mono MultiPoly::leading_mono() const {
  assert(!t_.empty());
  const Mono* best = nullptr;
  for (const auto& [m, c] : t_)
    if (!best || mono_less(*best, m, ord_)) best = &m;
  return *best;
}

Rat MultiPoly::leading_coeff() const { return t_.at(leading_mono()); }

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, mono_deg(m));
  return d;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(nvars_, ord_);
  for (const auto& [m1, c1] : t_)
    for (const auto& [m2, c2] : o.t_) r.add_term(mono_mul(m1, m2), c1 * c2);
  return r;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
  MultiPoly r(nvars_, ord_);
  if (c == 0) return r;
  for (const auto& [m, cc] : t_) r.add_term(m, cc * c);
  return r;
}

MultiPoly MultiPoly::times_mono(const Mono& m, const Rat& c) const {
  MultiPoly r(nvars_, ord_);
  if (c == 0) return r;
  for (const auto& [mm, cc] : t_) r.add_term(mono_mul(mm, m), cc * c);
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading_coeff());
}

Rat MultiPoly::evaluate(const std::vector<Rat>& point) const {
  assert(static_cast<int>(point.size()) == nvars_);
  Rat v = 0;
  for (const auto& [m, c] : t_) {
    Rat term = c;
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m[i]; ++e) term *= point[i];
    v += term;
  }
  return v;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::vector<const Mono*> order;
  for (const auto& [m, c] : t_) order.push_back(&m);
  std::sort(order.begin(), order.end(),
            [&](const Mono* a, const Mono* b) { return mono_less(*b, *a, ord_); });
  std::ostringstream os;
  bool first = true;
  for (const Mono* m : order) {
    Rat c = t_.at(*m);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rat a = abs(c);
    bool has_var = mono_deg(*m) > 0;
    if (a != 1 || !has_var) os << a.get_str();
    bool started = false;
    for (int i = 0; i < nvars_; ++i) {
      if ((*m)[i] == 0) continue;
      if (started || a != 1) os << "*";
      os << names[i];
      if ((*m)[i] > 1) os << "^" << (*m)[i];
      started = true;
    }
  }
  return os.str();
}

}  // namespace toric
