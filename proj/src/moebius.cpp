#include "s1web/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace s1web::moebius {

void RSP::normalize() {
  double an = std::abs(n), ad = std::abs(d);
  double m = std::max(an, ad);
  if (m == 0.0 || !std::isfinite(m)) throw std::domain_error("RSP: invalid homogeneous pair");
  n /= m;
  d /= m;
}

Cpx RSP::value() const {
  if (is_infinity()) throw std::domain_error("RSP: value() at infinity");
  return n / d;
}

Cpx RSP::value_or_huge() const {
  if (is_infinity()) return {1e300, 0.0};
  return n / d;
}

std::string RSP::to_string() const {
  if (is_infinity()) return "inf";
  std::ostringstream os;
  os.precision(15);
  Cpx v = value();
  os << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
  return os.str();
}

double chordal(const RSP& a, const RSP& b) {
  double num = std::abs(a.n * b.d - b.n * a.d);
  double ha = std::hypot(std::abs(a.n), std::abs(a.d));
  double hb = std::hypot(std::abs(b.n), std::abs(b.d));
  return 2.0 * num / (ha * hb);
}

MoebiusMap MoebiusMap::normalized() const {
  std::array<Cpx, 4> e{a, b, c, d};
  double fro = 0.0;
  for (auto& v : e) fro += std::norm(v);
  fro = std::sqrt(fro);
  if (fro == 0.0) throw std::domain_error("MoebiusMap: zero matrix");
  size_t imax = 0;
  for (size_t k = 1; k < 4; ++k)
    if (std::abs(e[k]) > std::abs(e[imax])) imax = k;
  Cpx phase = e[imax] / std::abs(e[imax]);
  Cpx s = 1.0 / (fro * phase);
  return {a * s, b * s, c * s, d * s};
}

MoebiusMap compose(const MoebiusMap& m, const MoebiusMap& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
          m.c * n.b + m.d * n.d};
}

double proj_distance(const MoebiusMap& m, const MoebiusMap& n) {
  MoebiusMap mm = m.normalized(), nn = n.normalized();
  auto d2 = [](Cpx u, Cpx v) { return std::norm(u - v); };
  return std::sqrt(d2(mm.a, nn.a) + d2(mm.b, nn.b) + d2(mm.c, nn.c) + d2(mm.d, nn.d));
}

namespace {
Cpx det2(const RSP& p, const RSP& q) { return p.n * q.d - p.d * q.n; }
}  // namespace

MoebiusMap map_from_images_of_0_1_inf(const RSP& p, const RSP& q, const RSP& r) {
  // Columns scaled so that (1:1) lands on q.
  Cpx lam = det2(r, q);
  Cpx mu = det2(p, q);
  MoebiusMap m{mu * r.n, lam * p.n, mu * r.d, lam * p.d};
  if (std::abs(m.det()) < 1e-30) throw std::domain_error("map_from_images: degenerate triple");
  return m;
}

MoebiusMap map_from_three_pairs(const std::array<RSP, 3>& from, const std::array<RSP, 3>& to) {
  MoebiusMap A = map_from_images_of_0_1_inf(from[0], from[1], from[2]);
  MoebiusMap B = map_from_images_of_0_1_inf(to[0], to[1], to[2]);
  return compose(B, A.inverse());
}

Cpx cross_ratio(const RSP& a, const RSP& b, const RSP& c, const RSP& d) {
  const RSP* pts[4] = {&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (chordal(*pts[i], *pts[j]) < 1e-12)
        throw std::invalid_argument("cross_ratio: repeated point");
  Cpx num = det2(a, c) * det2(b, d);
  Cpx den = det2(a, d) * det2(b, c);
  return num / den;
}

std::vector<RSP> gamma_orbit(const RSP& z, double tol) {
  std::vector<RSP> images = {z, RSP{-z.n, z.d}, RSP{z.d, z.n}, RSP{-z.d, z.n}};
  std::vector<RSP> orbit;
  for (const auto& w : images) {
    bool seen = false;
    for (const auto& o : orbit) seen = seen || chordal(o, w) < tol;
    if (!seen) orbit.push_back(w);
  }
  return orbit;
}

std::string torsion_label_name(TorsionLabel l) {
  switch (l) {
    case TorsionLabel::infty: return "inf";
    case TorsionLabel::zero: return "0";
    case TorsionLabel::one: return "1";
    case TorsionLabel::t: return "t";
    case TorsionLabel::other: return "other";
  }
  return "?";
}

const MoebiusMap& FiberMonodromy::by_label(TorsionLabel l) const {
  switch (l) {
    case TorsionLabel::zero: return phi_0;
    case TorsionLabel::one: return phi_1;
    case TorsionLabel::t: return phi_t;
    default: return phi_inf;
  }
}

FiberMonodromy fiber_monodromy_maps(Cpx x0) {
  if (std::abs(x0) < 1e-12 || std::abs(x0 - 1.0) < 1e-12)
    throw std::domain_error("fiber_monodromy_maps: degenerate fiber x0 in {0, 1}");
  FiberMonodromy fm;
  fm.x0 = x0;
  fm.phi_inf = MoebiusMap::identity();
  fm.phi_0 = {1.0, -x0, 1.0, -1.0};
  fm.phi_1 = {0.0, x0, 1.0, 0.0};
  fm.phi_t = {x0, -x0, 1.0, -x0};
  return fm;
}

bool is_klein_four(const FiberMonodromy& fm, double tol) {
  const MoebiusMap* g[4] = {&fm.phi_inf, &fm.phi_0, &fm.phi_1, &fm.phi_t};
  // involutions
  for (int i = 0; i < 4; ++i)
    if (proj_distance(compose(*g[i], *g[i]), MoebiusMap::identity()) > tol) return false;
  // product of two distinct non-identity elements is the third
  int other[3][2] = {{2, 3}, {1, 3}, {1, 2}};
  for (int i = 1; i < 4; ++i) {
    int j = other[i - 1][0], k = other[i - 1][1];
    if (proj_distance(compose(*g[j], *g[k]), *g[i]) > tol) return false;
  }
  return true;
}

TorsionLabel classify_moebius(const MoebiusMap& m, Cpx x0, double tol) {
  FiberMonodromy fm = fiber_monodromy_maps(x0);
  struct Cand {
    TorsionLabel l;
    const MoebiusMap* m;
  } cands[4] = {{TorsionLabel::infty, &fm.phi_inf},
                {TorsionLabel::zero, &fm.phi_0},
                {TorsionLabel::one, &fm.phi_1},
                {TorsionLabel::t, &fm.phi_t}};
  TorsionLabel best = TorsionLabel::other;
  double best_d = tol;
  for (const auto& c : cands) {
    double d = proj_distance(m, *c.m);
    if (d < best_d) {
      best_d = d;
      best = c.l;
    }
  }
  return best;
}

ec::CurvePoint aut_translate(TorsionLabel label, const ec::CurvePoint& eps, Cpx t) {
  ec::CurvePoint p;
  switch (label) {
    case TorsionLabel::infty: return eps;
    case TorsionLabel::zero: p = ec::CurvePoint::affine(0.0, 0.0); break;
    case TorsionLabel::one: p = ec::CurvePoint::affine(1.0, 0.0); break;
    case TorsionLabel::t: p = ec::CurvePoint::affine(t, 0.0); break;
    case TorsionLabel::other: throw std::invalid_argument("aut_translate: not a torsion label");
  }
  return ec::add(eps, p, t);
}

}  // namespace s1web::moebius
