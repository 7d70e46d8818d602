#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "s1web/moebius.hpp"

namespace s1web::riccati {

using Cpx = std::complex<double>;
using moebius::RSP;

// Special-leaf polynomials (fixed-point loci of the fiber monodromy maps).
inline Cpx leaf_f0(Cpx x, Cpx z) { return -z * z + 2.0 * z - x; }
inline Cpx leaf_f1(Cpx x, Cpx z) { return -z * z + x; }
inline Cpx leaf_ft(Cpx x, Cpx z) { return z * z - 2.0 * x * z + x; }

// Coefficients of the polynomial 1-form Omega = P(x) dz + Q(x, z) dx,
// the clearing of dz + [-z^2/(4x(x-1)) - z/(2x) + 1/(4(x-1))] dx.
inline Cpx omega_P(Cpx x) { return 4.0 * x * (x - 1.0); }
inline Cpx omega_Q(Cpx x, Cpx z) { return -z * z - 2.0 * (x - 1.0) * z + x; }

/// Leaf slope dz/dx = (z^2 + 2(x-1)z - x) / (4x(x-1)); poles on x in {0, 1}.
Cpx slope_Z0(Cpx x, Cpx z);

/// First integral F = x f0^2 / ft^2 as a point of P^1.
/// Leaf values: 0 on f0, 1 on f1, infinity on ft, and t on the discriminant
/// quartic.  Throws at the pencil base points (0,0) and (1,1).
RSP first_integral(Cpx x, RSP z);
inline RSP first_integral(Cpx x, Cpx z) { return first_integral(x, RSP(z)); }

/// Central-difference directional derivative of F along (1, Z0), with a
/// Richardson (h, h/2) pair. Vanishes on leaves.
Cpx first_integral_invariance_residual(Cpx x, Cpx z, double h = 1e-5);

/// Gradient magnitude estimate |dF/dx| + |dF/dz| for residual scaling.
double first_integral_gradient_scale(Cpx x, Cpx z, double h = 1e-5);

struct SingularityRecord {
  std::string chart;           // "affine" or "infinity"
  Cpx loc_first, loc_second;   // coordinates in that chart: (x,z) or (u,w)=(1/x,1/z)
  std::array<Cpx, 4> linear;   // row-major linearization of the dual vector field
  Cpx eig1, eig2;              // |eig1| >= |eig2|
  Cpx eigenvalue_ratio;        // eig1 / eig2
  std::string classification;
  std::string note;
};

/// Zeros of both Omega coefficients on the fibers x = 0, x = 1 and the fiber
/// at infinity (chart u = 1/x, w = 1/z), with linearizations.
std::vector<SingularityRecord> analyze_singularities();

struct PsiResult {
  Cpx x_image;   // first projection of the multiplication-by-2 map
  RSP z_image;   // fiber coordinate straightened against the Ric_2 leaves
  Cpx z0, z1, z2, mu;
};

/// The straightening cover psi(X, Y, Z): base doubled, fiber moved by the
/// Moebius map taking (0, infinity, 1) to the three Ric_2 leaf values
/// (z0, z1, z2) over X, reading the undetermined third anchor as z2.
PsiResult psi_map(Cpx X, Cpx Y, RSP Z, Cpx t);

/// (Z^2 - 2Z + 2)^2 / (Z^2 (Z-2)^2); the value of F after psi.
Cpx pulled_back_integral(Cpx Z);

/// Coefficients of the pulled-back web quartic N(Z), degree 4 down to 0:
/// {t-1, -4t+4, 4t-8, 8, -4}.
std::array<Cpx, 5> starstar_N_coeffs(Cpx t);
Cpx starstar_N(Cpx Z, Cpx t);

/// Residual of (dZ/dX)^2 + N(Z) / (4X(X-1)(X-t)).
Cpx ode_double_star_residual(Cpx X, Cpx Z, Cpx dZdX, Cpx t);

}  // namespace s1web::riccati
