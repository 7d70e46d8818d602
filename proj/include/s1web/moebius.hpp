#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "s1web/elliptic.hpp"

namespace s1web::moebius {

using Cpx = std::complex<double>;

/// Point of the Riemann sphere in homogeneous coordinates (n : d),
/// kept with max(|n|, |d|) = 1 so either chart is well conditioned.
struct RSP {
  Cpx n{0.0, 0.0};
  Cpx d{1.0, 0.0};

  RSP() = default;
  RSP(Cpx value) : n(value), d(1.0, 0.0) { normalize(); }  // NOLINT
  RSP(Cpx nn, Cpx dd) : n(nn), d(dd) { normalize(); }

  static RSP infinity() { return {Cpx(1.0), Cpx(0.0)}; }

  void normalize();
  bool is_infinity(double tol = 1e-13) const { return std::abs(d) <= tol * std::abs(n); }
  bool is_finite(double tol = 1e-13) const { return !is_infinity(tol); }
  Cpx value() const;          // throws on infinity
  Cpx value_or_huge() const;  // large sentinel instead of throwing
  std::string to_string() const;
};

/// Chordal metric on the sphere; handles infinity exactly, range [0, 2].
double chordal(const RSP& a, const RSP& b);

/// Projective class of an invertible 2x2 matrix acting by (az+b)/(cz+d).
struct MoebiusMap {
  Cpx a{1.0}, b{0.0}, c{0.0}, d{1.0};

  static MoebiusMap identity() { return {}; }
  Cpx det() const { return a * d - b * c; }
  MoebiusMap inverse() const { return {d, -b, -c, a}; }

  RSP operator()(const RSP& p) const { return {a * p.n + b * p.d, c * p.n + d * p.d}; }

  /// Unit Frobenius norm with the largest-modulus entry rotated to the
  /// positive real axis, so projectively equal maps compare entrywise.
  MoebiusMap normalized() const;
};

MoebiusMap compose(const MoebiusMap& m, const MoebiusMap& n);  // m after n

/// Frobenius distance of the phase-fixed normalizations; zero iff same class.
double proj_distance(const MoebiusMap& m, const MoebiusMap& n);

/// Unique map sending (0, 1, infinity) to (p, q, r).
MoebiusMap map_from_images_of_0_1_inf(const RSP& p, const RSP& q, const RSP& r);

/// Unique map sending the first triple to the second.
MoebiusMap map_from_three_pairs(const std::array<RSP, 3>& from, const std::array<RSP, 3>& to);

/// ((a-c)(b-d)) / ((a-d)(b-c)) with infinity limits; throws on repeated points.
Cpx cross_ratio(const RSP& a, const RSP& b, const RSP& c, const RSP& d);

/// Orbit of z under the dihedral group <-z, 1/z>; size 4 except on the
/// three special orbits {1,-1}, {i,-i}, {0,infinity} of size 2.
std::vector<RSP> gamma_orbit(const RSP& z, double tol = 1e-9);

enum class TorsionLabel { infty, zero, one, t, other };
std::string torsion_label_name(TorsionLabel l);

struct FiberMonodromy {
  Cpx x0;
  MoebiusMap phi_inf;  // identity
  MoebiusMap phi_0;    // z -> (z - x0)/(z - 1)
  MoebiusMap phi_1;    // z -> x0/z
  MoebiusMap phi_t;    // z -> x0 (z - 1)/(z - x0)

  const MoebiusMap& by_label(TorsionLabel l) const;
};

/// The four monodromy maps of the trivialized Riccati on the fiber over x0.
FiberMonodromy fiber_monodromy_maps(Cpx x0);

/// Klein-four-group table check for the four fiber maps.
bool is_klein_four(const FiberMonodromy& maps, double tol = 1e-9);

TorsionLabel classify_moebius(const MoebiusMap& m, Cpx x0, double tol = 1e-6);

/// Action of the order-4 automorphism group on section parameters:
/// translate by the 2-torsion point named by the label.
ec::CurvePoint aut_translate(TorsionLabel label, const ec::CurvePoint& eps, Cpx t);

}  // namespace s1web::moebius
