#include "s1web/identities.hpp"

#include <functional>

namespace s1web::exact {

namespace {

MultiPoly C(long n) { return MultiPoly::constant(GaussianRational(n)); }
MultiPoly V(Var v, int e = 1) { return MultiPoly::variable(v, e); }

// Numerator and denominator of the first integral F = x f0^2 / ft^2.
MultiPoly F_num() { return V(Var::x) * poly_f0().pow(2); }
MultiPoly F_den() { return poly_ft().pow(2); }

// Coefficients of the Riccati form Omega = P dz + Q dx.
MultiPoly omega_P() { return C(4) * V(Var::x) * (V(Var::x) - C(1)); }
MultiPoly omega_Q() {
  return -V(Var::z, 2) - C(2) * (V(Var::x) - C(1)) * V(Var::z) + V(Var::x);
}

// Pieces of the slope formulas for the roots of the section quadratic.
// With g = 3u^2 - 2(1+t)u + t and w = u(u-1)(u-t), the slope of the section
// with parameter a through (u, v, z) is (p + q a)/(u - a) where
//   p = (1-z)(2w - g u)/(2w),  q = (g(u-z) - 2w)/(2w).
// phat, qhat are the numerators over the common denominator 2w.
MultiPoly slope_g() {
  return C(3) * V(Var::u, 2) - C(2) * (C(1) + V(Var::t)) * V(Var::u) + V(Var::t);
}
MultiPoly slope_w() {
  return V(Var::u) * (V(Var::u) - C(1)) * (V(Var::u) - V(Var::t));
}
MultiPoly slope_phat() { return (C(1) - V(Var::z)) * (C(2) * slope_w() - slope_g() * V(Var::u)); }
MultiPoly slope_qhat() { return slope_g() * (V(Var::u) - V(Var::z)) - C(2) * slope_w(); }

// Value of the section quadratic at x0 = u; the common denominator of the
// symmetric slope functions.  Factors as u(u-1)(u^2 - t - 2z(u-t)).
MultiPoly slope_den() {
  return V(Var::u, 2) * poly_star_A() + V(Var::u) * poly_star_B() + poly_star_C();
}

// Numerator of Z1 + Z2 over 2w * slope_den().
MultiPoly slope_sum_num() {
  MultiPoly u = V(Var::u);
  return C(2) * slope_phat() * u * poly_star_A() -
         (slope_qhat() * u - slope_phat()) * poly_star_B() - C(2) * slope_qhat() * poly_star_C();
}

// Numerator of Z1 * Z2 over 4w^2 * slope_den().
MultiPoly slope_prod_num() {
  return slope_phat().pow(2) * poly_star_A() - slope_phat() * slope_qhat() * poly_star_B() +
         slope_qhat().pow(2) * poly_star_C();
}

// Numerator of 2 Z0 with u in place of x: (z^2 + 2(u-1)z - u) / (2u(u-1)).
MultiPoly two_z0_num() {
  return V(Var::z, 2) + C(2) * (V(Var::u) - C(1)) * V(Var::z) - V(Var::u);
}
MultiPoly two_z0_den() { return C(2) * V(Var::u) * (V(Var::u) - C(1)); }

MultiPoly dF_wedge_omega_numerator(const MultiPoly& num, const MultiPoly& den) {
  // dF ^ Omega = [den*dnum - num*dden] ^ Omega / den^2; the dx^dz coefficient
  // of (n_x dx + n_z dz) ^ (P dz + Q dx) is n_x P - n_z Q.
  const MultiPoly P = omega_P(), Q = omega_Q();
  return den * (num.derivative(Var::x) * P - num.derivative(Var::z) * Q) -
         num * (den.derivative(Var::x) * P - den.derivative(Var::z) * Q);
}

}  // namespace

std::string identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::I1: return "I1";
    case IdentityId::I2: return "I2";
    case IdentityId::I3: return "I3";
    case IdentityId::I4: return "I4";
    case IdentityId::I5: return "I5";
    case IdentityId::I6: return "I6";
  }
  return "?";
}

std::string Witness::to_string() const {
  std::string s = "(";
  for (int k = 0; k < kNumVars; ++k) {
    if (k) s += ", ";
    s += kVarNames[k];
    s += "=";
    s += point[k].to_string();
  }
  s += ") -> ";
  s += value.to_string();
  return s;
}

MultiPoly identity_defect(IdentityId id) {
  const MultiPoly x = V(Var::x);
  switch (id) {
    case IdentityId::I1:
      return x * poly_f0().pow(2) - (x - C(1)) * poly_f1().pow(2) - poly_ft().pow(2);
    case IdentityId::I2:
      return x * poly_f0().pow(2) - V(Var::t) * poly_ft().pow(2) +
             poly_delta().rename_var(Var::u, Var::x);
    case IdentityId::I3:
      return poly_star_B().pow(2) - C(4) * poly_star_A() * poly_star_C() -
             (V(Var::t) - V(Var::u)) * poly_delta();
    case IdentityId::I4: {
      // numerator of F(x, 0) - x
      MultiPoly n0 = F_num().substitute(Var::z, GaussianRational(0));
      MultiPoly d0 = F_den().substitute(Var::z, GaussianRational(0));
      return n0 - x * d0;
    }
    case IdentityId::I5:
      return dF_wedge_omega_numerator(F_num(), F_den()).reduce_mod_curve();
    case IdentityId::I6:
      // (Z1 + Z2) - 2 Z0 cross-multiplied: sum_num * z0_den - z0_num * 2w * slope_den
      return slope_sum_num() * two_z0_den() -
             two_z0_num() * C(2) * slope_w() * slope_den();
  }
  return {};
}

namespace {
std::string identity_description(IdentityId id) {
  switch (id) {
    case IdentityId::I1: return "x f0^2 - (x-1) f1^2 = ft^2";
    case IdentityId::I2: return "x f0^2 - t ft^2 = -Delta(u:=x, z)";
    case IdentityId::I3: return "B^2 - 4AC = (t-u) Delta";
    case IdentityId::I4: return "F(x, 0) = x: numerator vanishes";
    case IdentityId::I5: return "dF ^ Omega = 0 after reduction mod the curve";
    case IdentityId::I6: return "2-web slope sum equals 2 Z0 as rational functions";
  }
  return "";
}
}  // namespace

std::optional<Witness> find_nonzero_witness(const MultiPoly& p, int radius) {
  if (p.is_zero()) return std::nullopt;
  std::array<GaussianRational, kNumVars> pt;
  std::function<std::optional<Witness>(int)> rec = [&](int k) -> std::optional<Witness> {
    if (k == kNumVars) {
      GaussianRational v = p.eval(pt);
      if (!v.is_zero()) return Witness{pt, v};
      return std::nullopt;
    }
    if (p.degree(static_cast<Var>(k)) == 0) {
      pt[k] = GaussianRational(0);
      return rec(k + 1);
    }
    for (int c = 2; c <= 2 + radius; ++c) {
      pt[k] = GaussianRational(c);
      if (auto w = rec(k + 1)) return w;
    }
    return std::nullopt;
  };
  return rec(0);
}

bool vanishes_on_degree_grid(const MultiPoly& p) {
  if (p.is_zero()) return true;
  std::array<int, kNumVars> degs;
  for (int k = 0; k < kNumVars; ++k) degs[k] = p.degree(static_cast<Var>(k));
  std::array<GaussianRational, kNumVars> pt;
  std::function<bool(int)> rec = [&](int k) -> bool {
    if (k == kNumVars) return p.eval(pt).is_zero();
    for (int c = 0; c <= degs[k]; ++c) {
      pt[k] = GaussianRational(c);
      if (!rec(k + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

IdentityResult identity_check(IdentityId id) {
  IdentityResult r;
  r.id = id;
  r.name = identity_name(id);
  r.description = identity_description(id);
  MultiPoly defect = identity_defect(id);
  r.zero = defect.is_zero();
  r.defect_terms = defect.num_terms();
  if (!r.zero) r.witness = find_nonzero_witness(defect);
  return r;
}

std::vector<IdentityResult> check_all_identities() {
  std::vector<IdentityResult> out;
  for (auto id : {IdentityId::I1, IdentityId::I2, IdentityId::I3, IdentityId::I4, IdentityId::I5,
                  IdentityId::I6})
    out.push_back(identity_check(id));
  return out;
}

MultiPoly web_ode_constant_inner_derived() {
  MultiPoly t = V(Var::t), u = V(Var::u), z = V(Var::z);
  return (C(2) * t * u - u.pow(2) - t) * z - u.pow(3) + C(2) * u.pow(2) - t * u;
}

MultiPoly web_ode_constant_inner_variant() {
  MultiPoly t = V(Var::t), u = V(Var::u), z = V(Var::z);
  return (C(2) * t * u - u.pow(2) - t) * z - u.pow(3) + u.pow(2) - t * u + C(2);
}

namespace {
// P = z(z-1) inner / (4 u^2 (u-1)^2 (t-u)) against the exact slope product
// prod_num / (4 w^2 slope_den):  cross-multiplied canonical test.
bool constant_coeff_matches(const MultiPoly& inner) {
  MultiPoly t = V(Var::t), u = V(Var::u), z = V(Var::z);
  MultiPoly lhs_num = z * (z - C(1)) * inner;
  MultiPoly lhs_den = C(4) * u.pow(2) * (u - C(1)).pow(2) * (t - u);
  MultiPoly rhs_num = slope_prod_num();
  MultiPoly rhs_den = C(4) * slope_w().pow(2) * slope_den();
  return (lhs_num * rhs_den - rhs_num * lhs_den).is_zero();
}
}  // namespace

CoefficientComparison compare_web_ode_constant() {
  CoefficientComparison cmp;
  cmp.derived_matches = constant_coeff_matches(web_ode_constant_inner_derived());
  cmp.variant_matches = constant_coeff_matches(web_ode_constant_inner_variant());
  if (!cmp.variant_matches) {
    MultiPoly diff = web_ode_constant_inner_variant() - web_ode_constant_inner_derived();
    cmp.variant_witness = find_nonzero_witness(diff);
  }
  return cmp;
}

bool slope_discriminant_matches_delta() {
  // Z0^2 - P = Delta / (16 u^2 (t-u) (u-1)^2) with P = z(z-1) inner / (4u^2(u-1)^2(t-u)):
  // numerator form: (z^2+2(u-1)z-u)^2 (t-u) - 4 z(z-1) inner = Delta.
  MultiPoly t = V(Var::t), u = V(Var::u), z = V(Var::z);
  MultiPoly lhs = two_z0_num().pow(2) * (t - u) -
                  C(4) * z * (z - C(1)) * web_ode_constant_inner_derived();
  return (lhs - poly_delta()).is_zero();
}

NumeratorComparison compare_first_integral_numerators() {
  NumeratorComparison out;
  MultiPoly x = V(Var::x), z = V(Var::z);
  MultiPoly variant_num = x * (z.pow(2) - C(2) * z - x).pow(2);
  out.difference = variant_num - F_num();
  out.witness = find_nonzero_witness(out.difference);
  out.variant_is_first_integral =
      dF_wedge_omega_numerator(variant_num, F_den()).reduce_mod_curve().is_zero();
  return out;
}

}  // namespace s1web::exact
