#include "s1web/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace s1web::exact {

void MultiPoly::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::constant(GaussianRational c) {
  MultiPoly p;
  p.add_term(Monomial{0, 0, 0, 0, 0}, c);
  return p;
}

MultiPoly MultiPoly::variable(Var v, int exponent) {
  if (exponent < 0) throw std::invalid_argument("MultiPoly: negative exponent");
  MultiPoly p;
  Monomial m{0, 0, 0, 0, 0};
  m[static_cast<int>(v)] = exponent;
  p.add_term(m, GaussianRational(1));
  return p;
}

int MultiPoly::degree(Var v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<int>(v)]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (int k = 0; k < kNumVars; ++k) m[k] = ma[k] + mb[k];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::scaled(const GaussianRational& c) const {
  MultiPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r = constant(GaussianRational(1));
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    base = base * base;
    k >>= 1u;
  }
  return r;
}

MultiPoly MultiPoly::derivative(Var v) const {
  int iv = static_cast<int>(v);
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    if (m[iv] == 0) continue;
    Monomial d = m;
    d[iv] -= 1;
    r.add_term(d, c * GaussianRational(m[iv]));
  }
  return r;
}

MultiPoly MultiPoly::rename_var(Var from, Var to) const {
  int ifrom = static_cast<int>(from), ito = static_cast<int>(to);
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial d = m;
    d[ito] += d[ifrom];
    d[ifrom] = 0;
    r.add_term(d, c);
  }
  return r;
}

MultiPoly MultiPoly::substitute(Var v, const GaussianRational& value) const {
  int iv = static_cast<int>(v);
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    GaussianRational coeff = c;
    for (int k = 0; k < m[iv]; ++k) coeff *= value;
    Monomial d = m;
    d[iv] = 0;
    r.add_term(d, coeff);
  }
  return r;
}

MultiPoly MultiPoly::reduce_mod_curve() const {
  const MultiPoly rhs = curve_rhs();
  MultiPoly r;
  int iy = static_cast<int>(Var::y);
  for (const auto& [m, c] : terms_) {
    int ey = m[iy];
    Monomial d = m;
    d[iy] = ey % 2;
    MultiPoly term;
    term.add_term(d, c);
    if (ey >= 2) term = term * rhs.pow(static_cast<unsigned>(ey / 2));
    r += term;
  }
  return r;
}

GaussianRational MultiPoly::eval(const std::array<GaussianRational, kNumVars>& point) const {
  GaussianRational acc(0);
  for (const auto& [m, c] : terms_) {
    GaussianRational v = c;
    for (int k = 0; k < kNumVars; ++k)
      for (int e = 0; e < m[k]; ++e) v *= point[k];
    acc += v;
  }
  return acc;
}

std::complex<double> MultiPoly::eval(const std::array<std::complex<double>, kNumVars>& point) const {
  std::complex<double> acc = 0.0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> v = c.to_complex();
    for (int k = 0; k < kNumVars; ++k)
      for (int e = 0; e < m[k]; ++e) v *= point[k];
    acc += v;
  }
  return acc;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (int k = 0; k < kNumVars; ++k) {
      if (m[k] == 0) continue;
      os << "*" << kVarNames[k];
      if (m[k] > 1) os << "^" << m[k];
    }
  }
  return os.str();
}

namespace {
MultiPoly C(long n) { return MultiPoly::constant(GaussianRational(n)); }
MultiPoly V(Var v, int e = 1) { return MultiPoly::variable(v, e); }
}  // namespace

MultiPoly curve_rhs() {
  // x^3 - (1+t) x^2 + t x
  return V(Var::x, 3) - (C(1) + V(Var::t)) * V(Var::x, 2) + V(Var::t) * V(Var::x);
}

MultiPoly poly_f0() { return -V(Var::z, 2) + C(2) * V(Var::z) - V(Var::x); }
MultiPoly poly_f1() { return -V(Var::z, 2) + V(Var::x); }
MultiPoly poly_ft() { return V(Var::z, 2) - C(2) * V(Var::x) * V(Var::z) + V(Var::x); }

MultiPoly poly_delta() {
  MultiPoly t = V(Var::t), u = V(Var::u), z = V(Var::z);
  return (t - u) * z.pow(4) - C(4) * (t - C(1)) * u * z.pow(3) +
         C(2) * u * (C(2) * t * u + t - u - C(2)) * z.pow(2) - C(4) * u.pow(2) * (t - C(1)) * z +
         u.pow(2) * (t - u);
}

MultiPoly poly_star_A() {
  MultiPoly u = V(Var::u), z = V(Var::z);
  return (u - z).pow(2);
}

MultiPoly poly_star_B() {
  MultiPoly t = V(Var::t), u = V(Var::u), z = V(Var::z);
  return (-t - u) * z.pow(2) + C(2) * u * (t + C(1)) * z - u * (t + u);
}

MultiPoly poly_star_C() {
  MultiPoly t = V(Var::t), u = V(Var::u), z = V(Var::z);
  return t * u * (z - C(1)).pow(2);
}

}  // namespace s1web::exact
