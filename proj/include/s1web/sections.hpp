#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "s1web/elliptic.hpp"
#include "s1web/moebius.hpp"
#include "s1web/riccati.hpp"

namespace s1web::web {

using Cpx = std::complex<double>;
using moebius::RSP;
using ec::CurvePoint;

// Labels for the sections of the trivialized 2-web.  A generic parameter is
// a curve point with y0 != 0; the constant sections z = 0, 1, infinity carry
// the 2-torsion parameters (1,0), (0,0), (t,0); the diagonal z = x carries
// the point at infinity.
struct GenericSection {
  Cpx x0, y0;
};
struct DiagonalSection {};
enum class ConstKind { zero, one, inf };
struct ConstantSection {
  ConstKind which;
};
using SectionParam = std::variant<GenericSection, DiagonalSection, ConstantSection>;

std::string section_to_string(const SectionParam& s);
bool sections_equal(const SectionParam& a, const SectionParam& b, double tol = 1e-9);

/// Curve point labelling the section (the 2-torsion calibration for the
/// constants, p_infinity for the diagonal).
CurvePoint section_parameter_point(const SectionParam& s, Cpx t);

/// Value of the section graph over a curve point, with P^1 limits.
RSP section_value(const SectionParam& s, const CurvePoint& p, Cpx t);

/// dz/dx of the section graph along the curve at p. Throws on graph poles.
Cpx section_slope(const SectionParam& s, const CurvePoint& p, Cpx t);

// Coefficients of the section quadratic A x0^2 + B x0 + C = 0 whose roots
// are the parameters of the sections through (u, v, z); shared between the
// numeric and exact paths.
template <class K>
std::array<K, 3> star_coeffs(const K& u, const K& z, const K& t) {
  using F = ec::FieldOps<K>;
  const K one = F::from_int(1), two = F::from_int(2);
  K A = (u - z) * (u - z);
  K B = (-t - u) * z * z + two * u * (t + one) * z - u * (t + u);
  K C = t * u * (z - one) * (z - one);
  return {A, B, C};
}

/// Recovers the y-coordinate of a generic parameter from the graph equation:
///   y0 = (1 - x0) x0 v / ((1 - x0) u - z (u - x0)).
template <class K>
K recover_y0(const K& x0, const K& u, const K& v, const K& z) {
  using F = ec::FieldOps<K>;
  const K one = F::from_int(1);
  return (one - x0) * x0 * v / ((one - x0) * u - z * (u - x0));
}

/// Graph value of the generic section with parameter (x0, y0) at an affine
/// point (x, y) away from the graph pole.
template <class K>
K generic_graph_value(const K& x0, const K& y0, const K& x, const K& y) {
  using F = ec::FieldOps<K>;
  const K one = F::from_int(1);
  return (one - x0) * (y0 * x - x0 * y) / (y0 * (x - x0));
}

struct SectionSolution {
  SectionParam param;
  double graph_residual = 0.0;  // chordal distance of the graph value to z
  double curve_residual = 0.0;  // membership defect of the recovered (x0, y0)
};

struct WebSolveResult {
  std::vector<SectionSolution> solutions;  // two entries, equal on tangency
  bool tangent = false;
};

/// The (at most two) sections through (u, v, z); v != 0 required.
WebSolveResult sections_through(Cpx u, Cpx v, RSP z, Cpx t, double tol = 1e-9);

struct SlopePair {
  Cpx z1, z2;
  bool tangent = false;
};

/// Slopes of the two sections through the point, from the solved parameters.
SlopePair web_slopes(Cpx u, Cpx v, Cpx z, Cpx t);

// The 2-web is cut out by m^2 + L(x,z) m + P(x,z,t) = 0 in m = dz/dx.
Cpx web_ode_linear_coeff(Cpx x, Cpx z);            // -2 Z0
Cpx web_ode_constant_coeff(Cpx x, Cpx z, Cpx t);   // oracle-derived closed form
Cpx two_web_ode_residual(Cpx x, Cpx z, Cpx m, Cpx t);

/// Roots of the slope quadratic, ordered deterministically.
SlopePair web_slopes_from_ode(Cpx x, Cpx z, Cpx t);

/// The discriminant quartic of the 2-web in z over the base value u.
Cpx discriminant_delta(Cpx u, Cpx z, Cpx t);

/// Its roots in z (four, or three when the degree drops at u = t),
/// computed from the companion matrix and polished by Newton steps.
std::vector<Cpx> delta_roots(Cpx u, Cpx t);

struct DeltaLeafCheck {
  std::vector<Cpx> roots;
  double max_rel_F_residual = 0.0;        // |F - t| / |t| over the roots
  double max_double_root_residual = 0.0;  // |B^2 - 4AC| at the roots, scaled
  double max_slope_gap = 0.0;             // |Z1 - Z2| at the roots
  bool pass = false;
};

/// F equals t on every root of Delta(u, .); the tangency data comes along.
DeltaLeafCheck delta_leaf_check(Cpx u, Cpx t, double tol = 1e-8);

/// Self-intersection after the three elementary transformations:
/// each centre costs -1 when the section passes through it, +1 otherwise.
int self_intersection_update(int strict_transform_self_int, const std::array<bool, 3>& passes);

/// The unique intersection point of two distinct sections away from the
/// three blown-up centres (or at a centre, for pairs that only meet there).
/// Satisfies q1 + q2 + p = (t, 0) in the curve group.
CurvePoint intersection_base_point(const SectionParam& s1, const SectionParam& s2, Cpx t);

/// Constant-section calibration recovered from data: solves the section
/// quadratic at z in {0, 1, infinity} over a sample point and returns the
/// torsion x-parameter attached to each constant graph, in that order.
std::array<Cpx, 3> calibrate_constant_sections(Cpx u, Cpx v, Cpx t);

}  // namespace s1web::web
