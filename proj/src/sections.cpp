#include "s1web/sections.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace s1web::web {

namespace {

Cpx curve_g(Cpx x, Cpx t) { return 3.0 * x * x - 2.0 * (1.0 + t) * x + t; }

// Roots of a m^2 + b m + c with the large-root-first evaluation.
std::pair<Cpx, Cpx> quadratic_roots(Cpx a, Cpx b, Cpx c) {
  Cpx sq = std::sqrt(b * b - 4.0 * a * c);
  Cpx q = (std::abs(b + sq) >= std::abs(b - sq)) ? -(b + sq) / 2.0 : -(b - sq) / 2.0;
  if (std::abs(q) == 0.0) return {Cpx(0.0), Cpx(0.0)};
  return {q / a, c / q};
}

bool close_rel(Cpx a, Cpx b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

std::string section_to_string(const SectionParam& s) {
  std::ostringstream os;
  os.precision(15);
  if (std::holds_alternative<DiagonalSection>(s)) return "diagonal z = x";
  if (auto* c = std::get_if<ConstantSection>(&s)) {
    switch (c->which) {
      case ConstKind::zero: return "constant z = 0";
      case ConstKind::one: return "constant z = 1";
      case ConstKind::inf: return "constant z = inf";
    }
  }
  const auto& g = std::get<GenericSection>(s);
  os << "generic section through (" << g.x0.real() << (g.x0.imag() < 0 ? "" : "+")
     << g.x0.imag() << "i, " << g.y0.real() << (g.y0.imag() < 0 ? "" : "+") << g.y0.imag()
     << "i)";
  return os.str();
}

bool sections_equal(const SectionParam& a, const SectionParam& b, double tol) {
  if (a.index() != b.index()) return false;
  if (auto* ca = std::get_if<ConstantSection>(&a))
    return ca->which == std::get<ConstantSection>(b).which;
  if (std::holds_alternative<DiagonalSection>(a)) return true;
  const auto& ga = std::get<GenericSection>(a);
  const auto& gb = std::get<GenericSection>(b);
  return close_rel(ga.x0, gb.x0, tol) && close_rel(ga.y0, gb.y0, tol);
}

CurvePoint section_parameter_point(const SectionParam& s, Cpx t) {
  if (std::holds_alternative<DiagonalSection>(s)) return CurvePoint::at_infinity();
  if (auto* c = std::get_if<ConstantSection>(&s)) {
    switch (c->which) {
      case ConstKind::zero: return CurvePoint::affine(1.0, 0.0);
      case ConstKind::one: return CurvePoint::affine(0.0, 0.0);
      case ConstKind::inf: return CurvePoint::affine(t, 0.0);
    }
  }
  const auto& g = std::get<GenericSection>(s);
  return CurvePoint::affine(g.x0, g.y0);
}

RSP section_value(const SectionParam& s, const CurvePoint& p, Cpx t) {
  if (auto* c = std::get_if<ConstantSection>(&s)) {
    switch (c->which) {
      case ConstKind::zero: return RSP(Cpx(0.0));
      case ConstKind::one: return RSP(Cpx(1.0));
      case ConstKind::inf: return RSP::infinity();
    }
  }
  if (std::holds_alternative<DiagonalSection>(s)) {
    if (p.infinity) return RSP::infinity();
    return RSP(p.x);
  }
  const auto& g = std::get<GenericSection>(s);
  if (p.infinity) return RSP::infinity();
  double scale = std::max({1.0, std::abs(p.x), std::abs(g.x0)});
  if (std::abs(p.x - g.x0) < 1e-12 * scale) {
    if (std::abs(p.y + g.y0) < 1e-12 * std::max(1.0, std::abs(g.y0))) return RSP::infinity();
    // Value at the section's own anchor point: the 0/0 limit along the curve,
    // z -> (1 - x0)(y0 - x0 lambda)/y0 with lambda the tangent slope.
    Cpx lambda = curve_g(g.x0, t) / (2.0 * g.y0);
    return RSP((1.0 - g.x0) * (g.y0 - g.x0 * lambda) / g.y0);
  }
  return {(1.0 - g.x0) * (g.y0 * p.x - g.x0 * p.y), g.y0 * (p.x - g.x0)};
}

Cpx section_slope(const SectionParam& s, const CurvePoint& p, Cpx t) {
  if (std::holds_alternative<ConstantSection>(s)) return 0.0;
  if (std::holds_alternative<DiagonalSection>(s)) return 1.0;
  const auto& g = std::get<GenericSection>(s);
  if (p.infinity) throw std::domain_error("section_slope: slope chart breaks down at infinity");
  Cpx x = p.x;
  double sx = std::max(1.0, std::abs(x));
  if (std::abs(x) < 1e-12 || std::abs(x - 1.0) < 1e-12 * sx || std::abs(x - t) < 1e-12 * sx)
    throw std::domain_error("section_slope: base point on a 2-torsion fiber");
  if (std::abs(x - g.x0) < 1e-9 * std::max(1.0, std::abs(g.x0))) {
    if (std::abs(p.y - g.y0) > 1e-6 * std::max(1.0, std::abs(g.y0)))
      throw std::domain_error("section_slope: pole of the graph at the mirror anchor");
    // Anchor limit: both the first term and the bracket vanish; the slope is
    // (1-a) a (2 g'(a) b^2 - g(a)^2) / (8 b^4).
    Cpx a = g.x0, b = g.y0;
    Cpx gp = 6.0 * a - 2.0 * (1.0 + t);
    Cpx ga = curve_g(a, t);
    return (1.0 - a) * a * (2.0 * gp * b * b - ga * ga) / (8.0 * b * b * b * b);
  }
  RSP zv = section_value(s, p, t);
  if (zv.is_infinity()) throw std::domain_error("section_slope: pole of the graph");
  Cpx z0 = zv.value();
  Cpx a = g.x0;
  Cpx first = (1.0 - a - z0) / (x - a);
  Cpx bracket = z0 + (a - 1.0) * x / (x - a);
  Cpx rate = curve_g(x, t) / (2.0 * x * (x - 1.0) * (x - t));
  return first + bracket * rate;
}

WebSolveResult sections_through(Cpx u, Cpx v, RSP z, Cpx t, double tol) {
  if (std::abs(v) < 1e-12) throw std::domain_error("sections_through: v = 0 at a 2-torsion point");
  const double snap = 1e-8;

  WebSolveResult out;

  auto classify_root = [&](Cpx x0, bool z_at_inf) -> SectionSolution {
    SectionSolution sol;
    double sr = std::max(1.0, std::abs(x0));
    if (std::abs(x0 - 1.0) < snap * sr) {
      sol.param = ConstantSection{ConstKind::zero};
    } else if (std::abs(x0) < snap) {
      sol.param = ConstantSection{ConstKind::one};
    } else if (std::abs(x0 - t) < snap * sr) {
      sol.param = ConstantSection{ConstKind::inf};
    } else if (std::abs(x0 - u) < snap * std::max(1.0, std::abs(u))) {
      // Section anchored at the base point: the y0 recovery degenerates, but
      // the anchor is (u, v) for the finite incidence and (u, -v) for z = inf.
      sol.param = GenericSection{u, z_at_inf ? -v : v};
    } else {
      Cpx zz = z_at_inf ? Cpx(0.0) : z.value();
      Cpx y0;
      if (z_at_inf) {
        // Homogeneous recovery with z = (1 : 0): y0 = -(1-x0) x0 v / (u - x0) * 0 ... the
        // finite formula does not apply; fall back to matching the curve branch directly.
        Cpx y2 = ec::cubic_rhs(x0, t);
        y0 = std::sqrt(y2);
      } else {
        y0 = recover_y0(x0, u, v, zz);
      }
      sol.param = GenericSection{x0, y0};
      Cpx y2 = ec::cubic_rhs(x0, t);
      double scale = std::max({1.0, std::norm(y0), std::abs(y2)});
      sol.curve_residual = std::abs(y0 * y0 - y2) / scale;
      if (sol.curve_residual > 1e-5)
        throw std::logic_error("sections_through: recovered y0 is off the curve");
    }
    // With z at infinity the anchored generic branch must take the mirror sign.
    if (auto* gp = std::get_if<GenericSection>(&sol.param)) {
      if (z_at_inf && std::abs(gp->x0 - u) > snap) {
        // the section through (u, v, inf) is the mirror of the base point
        // only when its parameter is (u, -v); other parameters keep the
        // branch chosen by the curve equation, fixed below by the residual.
        CurvePoint pp = CurvePoint::affine(u, v);
        RSP val_plus = section_value(SectionParam{GenericSection{gp->x0, gp->y0}}, pp, t);
        RSP val_minus = section_value(SectionParam{GenericSection{gp->x0, -gp->y0}}, pp, t);
        if (moebius::chordal(val_minus, z) < moebius::chordal(val_plus, z)) gp->y0 = -gp->y0;
      }
    }
    CurvePoint pp = CurvePoint::affine(u, v);
    sol.graph_residual = moebius::chordal(section_value(sol.param, pp, t), z);
    return sol;
  };

  if (z.is_infinity()) {
    // Leading-order quadratic x0^2 - (t+u) x0 + tu = (x0 - t)(x0 - u).
    out.solutions.push_back(classify_root(t, true));
    out.solutions.push_back(classify_root(u, true));
    return out;
  }

  Cpx zz = z.value();
  if (close_rel(zz, u, tol)) {
    // Diagonal incidence; the cubic factors as (x0 - u)(x0 - t(u-1)/(u-t)).
    SectionSolution diag;
    diag.param = DiagonalSection{};
    CurvePoint pp = CurvePoint::affine(u, v);
    diag.graph_residual = moebius::chordal(section_value(diag.param, pp, t), z);
    out.solutions.push_back(diag);
    out.solutions.push_back(classify_root(t * (u - 1.0) / (u - t), false));
    return out;
  }

  auto [A, B, C] = star_coeffs(u, zz, t);
  Cpx disc = B * B - 4.0 * A * C;
  double disc_scale = std::max({std::abs(B * B), std::abs(4.0 * A * C), 1e-30});
  if (std::abs(disc) < 1e-14 * disc_scale) {
    out.tangent = true;
    Cpx x0 = -B / (2.0 * A);
    SectionSolution sol = classify_root(x0, false);
    out.solutions.push_back(sol);
    out.solutions.push_back(sol);
    return out;
  }
  auto [r1, r2] = quadratic_roots(A, B, C);
  out.solutions.push_back(classify_root(r1, false));
  out.solutions.push_back(classify_root(r2, false));
  return out;
}

SlopePair web_slopes(Cpx u, Cpx v, Cpx z, Cpx t) {
  WebSolveResult ws = sections_through(u, v, RSP(z), t);
  CurvePoint p = CurvePoint::affine(u, v);
  SlopePair sp;
  sp.tangent = ws.tangent;
  sp.z1 = section_slope(ws.solutions[0].param, p, t);
  sp.z2 = section_slope(ws.solutions[1].param, p, t);
  return sp;
}

Cpx web_ode_linear_coeff(Cpx x, Cpx z) { return -2.0 * riccati::slope_Z0(x, z); }

Cpx web_ode_constant_coeff(Cpx x, Cpx z, Cpx t) {
  Cpx den = 4.0 * x * x * (x - 1.0) * (x - 1.0) * (t - x);
  if (std::abs(den) < 1e-280)
    throw std::domain_error("web_ode_constant_coeff: pole on x in {0, 1, t}");
  Cpx inner = (2.0 * t * x - x * x - t) * z - x * x * x + 2.0 * x * x - t * x;
  return z * (z - 1.0) * inner / den;
}

Cpx two_web_ode_residual(Cpx x, Cpx z, Cpx m, Cpx t) {
  return m * m + web_ode_linear_coeff(x, z) * m + web_ode_constant_coeff(x, z, t);
}

SlopePair web_slopes_from_ode(Cpx x, Cpx z, Cpx t) {
  Cpx L = web_ode_linear_coeff(x, z);
  Cpx P = web_ode_constant_coeff(x, z, t);
  auto [m1, m2] = quadratic_roots(Cpx(1.0), L, P);
  // deterministic ordering by real part, then imaginary part
  if (m2.real() < m1.real() || (m2.real() == m1.real() && m2.imag() < m1.imag()))
    std::swap(m1, m2);
  SlopePair sp;
  sp.z1 = m1;
  sp.z2 = m2;
  Cpx disc = L * L - 4.0 * P;
  sp.tangent = std::abs(disc) < 1e-12 * std::max({std::abs(L * L), std::abs(4.0 * P), 1.0});
  return sp;
}

namespace {
std::array<Cpx, 5> delta_coeffs(Cpx u, Cpx t) {
  return {t - u, -4.0 * (t - 1.0) * u, 2.0 * u * (2.0 * t * u + t - u - 2.0),
          -4.0 * u * u * (t - 1.0), u * u * (t - u)};
}
}  // namespace

Cpx discriminant_delta(Cpx u, Cpx z, Cpx t) {
  auto c = delta_coeffs(u, t);
  Cpx acc = 0.0;
  for (Cpx ck : c) acc = acc * z + ck;
  return acc;
}

std::vector<Cpx> delta_roots(Cpx u, Cpx t) {
  auto c = delta_coeffs(u, t);
  // Degree drop at u = t: the quartic loses its leading coefficient.
  size_t first = 0;
  double lead_scale = 0.0;
  for (auto ck : c) lead_scale = std::max(lead_scale, std::abs(ck));
  while (first < 4 && std::abs(c[first]) < 1e-13 * lead_scale) ++first;
  size_t deg = 4 - first;
  if (deg == 0) return {};

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (size_t k = 0; k < deg; ++k) companion(0, k) = -c[first + 1 + k] / c[first];
  for (size_t k = 1; k < deg; ++k) companion(k, k - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);

  std::vector<Cpx> roots;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    Cpx r = solver.eigenvalues()(k);
    // two Newton polish steps on the full quartic
    for (int it = 0; it < 2; ++it) {
      Cpx p = 0.0, dp = 0.0;
      for (Cpx ck : c) {
        dp = dp * r + p;
        p = p * r + ck;
      }
      if (std::abs(dp) < 1e-280) break;
      r -= p / dp;
    }
    roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end(), [](Cpx a, Cpx b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  return roots;
}

DeltaLeafCheck delta_leaf_check(Cpx u, Cpx t, double tol) {
  DeltaLeafCheck out;
  out.roots = delta_roots(u, t);
  for (Cpx z : out.roots) {
    RSP F = riccati::first_integral(u, z);
    double fres = F.is_infinity() ? 1.0 : std::abs(F.value() - t) / std::max(1e-30, std::abs(t));
    out.max_rel_F_residual = std::max(out.max_rel_F_residual, fres);

    auto [A, B, C] = star_coeffs(u, z, t);
    double dscale = std::max({std::abs(B * B), std::abs(4.0 * A * C), 1.0});
    out.max_double_root_residual =
        std::max(out.max_double_root_residual, std::abs(B * B - 4.0 * A * C) / dscale);

    SlopePair sp = web_slopes_from_ode(u, z, t);
    out.max_slope_gap = std::max(out.max_slope_gap, std::abs(sp.z1 - sp.z2));
  }
  out.pass = out.max_rel_F_residual < tol;
  return out;
}

int self_intersection_update(int strict_transform_self_int, const std::array<bool, 3>& passes) {
  int r = 0;
  for (bool through : passes) r += through ? -1 : +1;
  return strict_transform_self_int + r;
}

namespace {

CurvePoint generic_generic_intersection(const GenericSection& s1, const GenericSection& s2,
                                        Cpx t) {
  Cpx a = s1.x0, b = s1.y0, ap = s2.x0, bp = s2.y0;

  // Mirror pair: graphs differ by y -> -y and agree exactly on y = 0; the
  // free agreement point is the 2-torsion point (t, 0).
  double sx = std::max(1.0, std::abs(a));
  if (std::abs(a - ap) < 1e-10 * sx && std::abs(b + bp) < 1e-10 * std::max(1.0, std::abs(b)))
    return CurvePoint::affine(t, 0.0);

  // Difference of the graphs cleared of denominators:
  //   eta = c2 (x^2 - x) + (d1 x + d0) y.
  Cpx c2 = b * bp * (ap - a);
  Cpx d1 = (1.0 - ap) * ap * b - (1.0 - a) * a * bp;
  Cpx d0 = a * ap * ((1.0 - a) * bp - (1.0 - ap) * b);

  double dscale = std::max({std::abs(c2), std::abs(d1), std::abs(d0), 1e-30});
  if (std::abs(d1) < 1e-12 * dscale && std::abs(d0) < 1e-12 * dscale)
    return CurvePoint::at_infinity();
  if (std::abs(d1) < 1e-12 * dscale) return CurvePoint::at_infinity();

  // Substituting y = -c2 x(x-1)/(d1 x + d0) into the curve equation and
  // removing the centre roots x = 0, 1 leaves the cubic
  //   (x - t)(d1 x + d0)^2 - c2^2 x(x-1) = 0 with roots {a, a', x_p}.
  Cpx xp = t * d0 * d0 / (d1 * d1 * a * ap);
  Cpx yp = -c2 * xp * (xp - 1.0) / (d1 * xp + d0);
  return CurvePoint::affine(xp, yp);
}

}  // namespace

CurvePoint intersection_base_point(const SectionParam& s1, const SectionParam& s2, Cpx t) {
  if (sections_equal(s1, s2))
    throw std::invalid_argument("intersection_base_point: sections coincide");

  // Normalize the order: generic first, then diagonal, then constants.
  auto rank = [](const SectionParam& s) {
    if (std::holds_alternative<GenericSection>(s)) return 0;
    if (std::holds_alternative<DiagonalSection>(s)) return 1;
    return 2;
  };
  const SectionParam& p1 = rank(s1) <= rank(s2) ? s1 : s2;
  const SectionParam& p2 = rank(s1) <= rank(s2) ? s2 : s1;

  if (auto* g1 = std::get_if<GenericSection>(&p1)) {
    Cpx a = g1->x0, b = g1->y0;
    if (auto* g2 = std::get_if<GenericSection>(&p2))
      return generic_generic_intersection(*g1, *g2, t);
    if (std::holds_alternative<DiagonalSection>(p2)) {
      Cpx xp = t * (a - 1.0) / (a - t);
      Cpx yp = b * xp * (1.0 - xp) / (a * (1.0 - a));
      return CurvePoint::affine(xp, yp);
    }
    switch (std::get<ConstantSection>(p2).which) {
      case ConstKind::zero: {
        Cpx xp = t / a;
        return CurvePoint::affine(xp, b * t / (a * a));
      }
      case ConstKind::one: {
        Cpx xp = (a - t) / (a - 1.0);
        return CurvePoint::affine(xp, b * (1.0 - xp) / (1.0 - a));
      }
      case ConstKind::inf:
        return CurvePoint::affine(a, -b);
    }
  }

  if (std::holds_alternative<DiagonalSection>(p1)) {
    // Diagonal against a constant: they agree where x equals the constant,
    // a tangential contact at the corresponding blown-up centre.
    switch (std::get<ConstantSection>(p2).which) {
      case ConstKind::zero: return CurvePoint::affine(0.0, 0.0);
      case ConstKind::one: return CurvePoint::affine(1.0, 0.0);
      case ConstKind::inf: return CurvePoint::at_infinity();
    }
  }

  // Constant against constant: the graphs never agree on a fiber; the
  // sections meet at the unique blown-up centre that neither passes through.
  ConstKind k1 = std::get<ConstantSection>(p1).which;
  ConstKind k2 = std::get<ConstantSection>(p2).which;
  auto has = [&](ConstKind k) { return k1 == k || k2 == k; };
  if (!has(ConstKind::inf)) return CurvePoint::at_infinity();  // centre (p_inf, inf)
  if (!has(ConstKind::one)) return CurvePoint::affine(1.0, 0.0);  // centre (1, 0, 1)
  return CurvePoint::affine(0.0, 0.0);                            // centre (0, 0, 0)
}

std::array<Cpx, 3> calibrate_constant_sections(Cpx u, Cpx v, Cpx t) {
  (void)v;
  std::array<Cpx, 3> torsion_param{};
  // z = 0: quadratic u^2 x0^2 - u(t+u) x0 + tu; the torsion root is the
  // one at a 2-torsion x value.
  auto torsion_root = [&](RSP z) -> Cpx {
    std::array<Cpx, 3> torsions{0.0, 1.0, t};
    Cpx best = torsions[0];
    double best_d = 1e300;
    Cpx roots[2];
    if (z.is_infinity()) {
      auto [r1, r2] = quadratic_roots(Cpx(1.0), -(t + u), t * u);
      roots[0] = r1;
      roots[1] = r2;
    } else {
      auto [A, B, C] = star_coeffs(u, z.value(), t);
      auto [r1, r2] = quadratic_roots(A, B, C);
      roots[0] = r1;
      roots[1] = r2;
    }
    for (Cpx r : roots)
      for (Cpx tv : torsions) {
        double d = std::abs(r - tv);
        if (d < best_d) {
          best_d = d;
          best = tv;
        }
      }
    return best;
  };
  torsion_param[0] = torsion_root(RSP(Cpx(0.0)));   // expects 1
  torsion_param[1] = torsion_root(RSP(Cpx(1.0)));   // expects 0
  torsion_param[2] = torsion_root(RSP::infinity()); // expects t
  return torsion_param;
}

}  // namespace s1web::web
