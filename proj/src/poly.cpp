#include "toric/poly.hpp"

#include <cassert>
#include <sstream>

namespace toric {

UniPolyZ::UniPolyZ(std::initializer_list<long> ascending) {
  for (long v : ascending) c_.emplace_back(v);
  trim();
}

UniPolyZ UniPolyZ::monomial(const Int& c, int deg) {
  UniPolyZ p;
  p.c_.assign(deg + 1, 0);
  p.c_[deg] = c;
  p.trim();
  return p;
}

void UniPolyZ::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int UniPolyZ::degree() const { return static_cast<int>(c_.size()) - 1; }

Int UniPolyZ::coeff(int deg) const {
  return (deg >= 0 && deg < static_cast<int>(c_.size())) ? c_[deg] : Int(0);
}

UniPolyZ UniPolyZ::operator+(const UniPolyZ& o) const {
  UniPolyZ r;
  r.c_.resize(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  r.trim();
  return r;
}

UniPolyZ UniPolyZ::operator-(const UniPolyZ& o) const {
  UniPolyZ r;
  r.c_.resize(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  r.trim();
  return r;
}

UniPolyZ UniPolyZ::operator*(const UniPolyZ& o) const {
  UniPolyZ r;
  if (c_.empty() || o.c_.empty()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

bool UniPolyZ::operator==(const UniPolyZ& o) const { return c_ == o.c_; }

Int UniPolyZ::evaluate(const Int& t) const {
  Int v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
  return v;
}

UniPolyZ UniPolyZ::pow(int e) const {
  UniPolyZ r{1};
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string UniPolyZ::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    Int c = coeff(d);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int a = abs(c);
    if (a != 1 || d == 0) os << a.get_str();
    if (d >= 1) os << var;
    if (d >= 2) os << "^" << d;
  }
  return os.str();
}

void BivariatePolyZ::add_term(int dx, int dy, const Int& c) {
  auto key = std::make_pair(dx, dy);
  Int& slot = t_[key];
  slot += c;
  if (slot == 0) t_.erase(key);
}

Int BivariatePolyZ::coeff(int dx, int dy) const {
  auto it = t_.find({dx, dy});
  return it == t_.end() ? Int(0) : it->second;
}

BivariatePolyZ BivariatePolyZ::operator+(const BivariatePolyZ& o) const {
  BivariatePolyZ r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, c);
  return r;
}

BivariatePolyZ BivariatePolyZ::operator-(const BivariatePolyZ& o) const {
  BivariatePolyZ r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, -c);
  return r;
}

BivariatePolyZ BivariatePolyZ::operator*(const BivariatePolyZ& o) const {
  BivariatePolyZ r;
  for (const auto& [k1, c1] : t_)
    for (const auto& [k2, c2] : o.t_) r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return r;
}

Int BivariatePolyZ::evaluate(const Int& x, const Int& y) const {
  Int v = 0;
  for (const auto& [k, c] : t_) {
    Int term = c;
    for (int i = 0; i < k.first; ++i) term *= x;
    for (int i = 0; i < k.second; ++i) term *= y;
    v += term;
  }
  return v;
}

UniPolyZ BivariatePolyZ::at_y_zero() const {
  UniPolyZ p;
  for (const auto& [k, c] : t_)
    if (k.second == 0) p = p + UniPolyZ::monomial(c, k.first);
  return p;
}

std::string BivariatePolyZ::to_string() const {
  if (t_.empty()) return "0";
  // order: total-degree descending, then x-degree descending
  std::vector<std::pair<std::pair<int, int>, Int>> terms(t_.begin(), t_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
    if (ta != tb) return ta > tb;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int a = abs(c);
    bool has_var = k.first > 0 || k.second > 0;
    if (a != 1 || !has_var) os << a.get_str();
    if (k.first >= 1) {
      os << "x";
      if (k.first >= 2) os << "^" << k.first;
    }
    if (k.second >= 1) {
      os << "y";
      if (k.second >= 2) os << "^" << k.second;
    }
  }
  return os.str();
}

UniPolyZ poincare_from_tutte(const BivariatePolyZ& tutte, int r, int rk) {
  assert(rk <= r);
  UniPolyZ p = tutte.at_y_zero();
  assert(p.degree() <= rk);
  // t^rk * p((2t+1)/t) = sum_d c_d (2t+1)^d t^(rk-d)
  UniPolyZ base{1, 2};  // 1 + 2t
  UniPolyZ acc;
  for (int d = 0; d <= p.degree(); ++d) {
    if (p.coeff(d) == 0) continue;
    acc = acc + UniPolyZ::monomial(p.coeff(d), rk - d) * base.pow(d);
  }
  return acc * UniPolyZ{1, 1}.pow(r - rk);
}

}  // namespace toric
