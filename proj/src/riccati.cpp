#include "s1web/riccati.hpp"

#include <cmath>
#include <stdexcept>

namespace s1web::riccati {

Cpx slope_Z0(Cpx x, Cpx z) {
  Cpx den = 4.0 * x * (x - 1.0);
  if (std::abs(den) < 1e-13 * std::max(1.0, std::norm(x)))
    throw std::domain_error("slope_Z0: pole on the fiber x in {0, 1}");
  return (z * z + 2.0 * (x - 1.0) * z - x) / den;
}

RSP first_integral(Cpx x, RSP z) {
  Cpx n, d;
  if (z.is_finite() && std::abs(z.value_or_huge()) <= 1.0) {
    Cpx zz = z.value();
    Cpx f0 = leaf_f0(x, zz), ft = leaf_ft(x, zz);
    n = x * f0 * f0;
    d = ft * ft;
  } else {
    // w = 1/z chart: f0 = z^2 (-1 + 2w - x w^2), ft = z^2 (1 - 2xw + x w^2)
    Cpx w = z.d / z.n;
    Cpx f0w = -1.0 + 2.0 * w - x * w * w;
    Cpx ftw = 1.0 - 2.0 * x * w + x * w * w;
    n = x * f0w * f0w;
    d = ftw * ftw;
  }
  double scale = std::max({1.0, std::abs(n), std::abs(d)});
  if (std::abs(n) < 1e-13 * scale && std::abs(d) < 1e-13 * scale)
    throw std::domain_error("first_integral: indeterminate at a pencil base point");
  return {n, d};
}

Cpx first_integral_invariance_residual(Cpx x, Cpx z, double h) {
  if (h <= 0.0 || x + h == x) throw std::domain_error("invariance residual: step underflow");
  Cpx m = slope_Z0(x, z);
  auto diff = [&](double step) {
    Cpx fp = first_integral(x + step, z + m * step).value();
    Cpx fm = first_integral(x - step, z - m * step).value();
    return (fp - fm) / (2.0 * step);
  };
  Cpx dh = diff(h), dh2 = diff(h / 2.0);
  return (4.0 * dh2 - dh) / 3.0;
}

double first_integral_gradient_scale(Cpx x, Cpx z, double h) {
  auto F = [&](Cpx xx, Cpx zz) { return first_integral(xx, zz).value(); };
  Cpx fx = (F(x + h, z) - F(x - h, z)) / (2.0 * h);
  Cpx fz = (F(x, z + h) - F(x, z - h)) / (2.0 * h);
  return std::abs(fx) + std::abs(fz);
}

namespace {

// Roots of a z^2 + b z + c, stable large-root-first form.
std::pair<Cpx, Cpx> quadratic_roots(Cpx a, Cpx b, Cpx c) {
  Cpx sq = std::sqrt(b * b - 4.0 * a * c);
  Cpx q = (std::abs(b + sq) >= std::abs(b - sq)) ? -(b + sq) / 2.0 : -(b - sq) / 2.0;
  if (std::abs(q) < 1e-300) return {Cpx(0.0), Cpx(0.0)};
  return {q / a, c / q};
}

std::pair<Cpx, Cpx> eigen2(const std::array<Cpx, 4>& m) {
  Cpx tr = m[0] + m[3];
  Cpx det = m[0] * m[3] - m[1] * m[2];
  auto [l1, l2] = quadratic_roots(1.0, -tr, det);
  if (std::abs(l1) < std::abs(l2)) std::swap(l1, l2);
  return {l1, l2};
}

SingularityRecord make_record(const std::string& chart, Cpx c1, Cpx c2,
                              const std::array<Cpx, 4>& lin) {
  SingularityRecord r;
  r.chart = chart;
  r.loc_first = c1;
  r.loc_second = c2;
  r.linear = lin;
  auto [l1, l2] = eigen2(lin);
  r.eig1 = l1;
  r.eig2 = l2;
  r.eigenvalue_ratio = l1 / l2;
  Cpx ratio = r.eigenvalue_ratio;
  if (std::abs(ratio - 2.0) < 1e-9) {
    r.classification = "dicritical node, eigenvalue ratio 2, invariant pencil z^2 = c x";
    r.note =
        "linearization has eigenvalue ratio 2, not the ratio-1 radial model x dz - z dx; "
        "the singular point is a 2:1 dicritical node";
  } else if (std::abs(ratio + 2.0) < 1e-9) {
    r.classification = "linearizable saddle, eigenvalue ratio -2";
  } else {
    r.classification = "eigenvalue ratio " + std::to_string(ratio.real());
  }
  return r;
}

}  // namespace

std::vector<SingularityRecord> analyze_singularities() {
  std::vector<SingularityRecord> out;

  // Dual vector field of Omega in the affine chart:
  //   xdot = 4x(x-1),  zdot = -Q = z^2 + 2(x-1)z - x
  auto affine_lin = [](Cpx x, Cpx z) -> std::array<Cpx, 4> {
    return {8.0 * x - 4.0, 0.0, 2.0 * z - 1.0, 2.0 * z + 2.0 * (x - 1.0)};
  };
  // Fiber x = 0: Q(0, z) = -z^2 + 2z has roots z in {0, 2}.
  for (auto [a, b, c] : {std::array<Cpx, 3>{-1.0, 2.0, 0.0}}) {
    auto [r1, r2] = quadratic_roots(a, b, c);
    for (Cpx z : {r1, r2}) out.push_back(make_record("affine", 0.0, z, affine_lin(0.0, z)));
  }
  // Fiber x = 1: Q(1, z) = -z^2 + 1 has roots z in {1, -1}.
  {
    auto [r1, r2] = quadratic_roots(Cpx(-1.0), Cpx(0.0), Cpx(1.0));
    for (Cpx z : {r1, r2}) out.push_back(make_record("affine", 1.0, z, affine_lin(1.0, z)));
  }
  // Fiber at infinity, chart (u, w) = (1/x, 1/z):
  // Omega becomes 4u(1-u) dw + (w^2 - 2(1-u)w - u) du, dual field
  //   udot = 4u(1-u),  wdot = -w^2 + 2(1-u)w + u
  auto inf_lin = [](Cpx u, Cpx w) -> std::array<Cpx, 4> {
    return {4.0 - 8.0 * u, 0.0, 1.0 - 2.0 * w, -2.0 * w + 2.0 - 2.0 * u};
  };
  {
    auto [r1, r2] = quadratic_roots(Cpx(-1.0), Cpx(2.0), Cpx(0.0));
    for (Cpx w : {r1, r2}) out.push_back(make_record("infinity", 0.0, w, inf_lin(0.0, w)));
  }
  return out;
}

PsiResult psi_map(Cpx X, Cpx Y, RSP Z, Cpx t) {
  double sx = std::max(1.0, std::abs(X));
  if (std::abs(X) < 1e-12 || std::abs(X - 1.0) < 1e-12 * sx || std::abs(X - t) < 1e-12 * sx)
    throw std::domain_error("psi_map: base point on a 2-torsion fiber");
  if (std::abs(X * X - t) < 1e-12 * std::max(1.0, std::norm(X)))
    throw std::domain_error("psi_map: degenerate anchor values (X^2 = t)");
  if (std::abs(Y) < 1e-12) throw std::domain_error("psi_map: Y = 0");

  PsiResult r;
  r.z0 = (-X * X + t) / (2.0 * (t - X));
  r.z1 = (-X * X + t) / (2.0 * Y);
  r.z2 = -r.z1;
  // mu with the third anchor read as z2: mu = (z2 - z0)/(z2 - z1)
  r.mu = (r.z2 - r.z0) / (r.z2 - r.z1);
  r.x_image = ec::x_double_formula(X, Y, t);
  // zeta = (Z mu z1 - z0) / (Z mu - 1), projectively in Z
  r.z_image = RSP{Z.n * r.mu * r.z1 - r.z0 * Z.d, Z.n * r.mu - Z.d};
  return r;
}

Cpx pulled_back_integral(Cpx Z) {
  Cpx den = Z * Z * (Z - 2.0) * (Z - 2.0);
  if (std::abs(den) < 1e-280) throw std::domain_error("pulled_back_integral: pole at Z in {0, 2}");
  Cpx num = Z * Z - 2.0 * Z + 2.0;
  return num * num / den;
}

std::array<Cpx, 5> starstar_N_coeffs(Cpx t) {
  return {t - 1.0, -4.0 * t + 4.0, 4.0 * t - 8.0, 8.0, -4.0};
}

Cpx starstar_N(Cpx Z, Cpx t) {
  auto c = starstar_N_coeffs(t);
  Cpx acc = 0.0;
  for (Cpx ck : c) acc = acc * Z + ck;
  return acc;
}

Cpx ode_double_star_residual(Cpx X, Cpx Z, Cpx dZdX, Cpx t) {
  Cpx den = 4.0 * X * (X - 1.0) * (X - t);
  if (std::abs(den) < 1e-13 * std::max(1.0, std::norm(X) * std::abs(X)))
    throw std::domain_error("ode_double_star_residual: pole on X in {0, 1, t}");
  return dZdX * dZdX + starstar_N(Z, t) / den;
}

}  // namespace s1web::riccati
