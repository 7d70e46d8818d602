#pragma once

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "s1web/sections.hpp"

namespace s1web::webgeo {

using Cpx = std::complex<double>;
using moebius::RSP;

/// A foliation of the (x, z) chart by dz/dx = eval(x, z).
struct SlopeField {
  std::function<Cpx(Cpx, Cpx)> eval;
  std::string name;
};

SlopeField riccati_field(Cpx t);

/// The two branches of the 2-web near a base point.  Each evaluation solves
/// the slope quadratic and picks the root closest to the branch value at the
/// base point, so the field is single-valued on a neighbourhood off Delta.
std::array<SlopeField, 2> web_branch_fields(Cpx t, Cpx x_base, Cpx z_base);

/// The non-hexagonal control web {0, 1, x+z}.
std::array<SlopeField, 3> control_web_fields();

struct WebPoint {
  Cpx x, z;
  Cpx y;                      // branch of the double cover over x
  std::array<RSP, 4> slopes;  // (infinity, Z0, Z1, Z2)
  bool on_delta = false;
};

WebPoint assemble_web_point(Cpx u, Cpx v, Cpx z, Cpx t);

/// cross_ratio(infinity, Z0, Z1, Z2) = (Z0 - Z2)/(Z0 - Z1); equals -1 exactly
/// when Z0 is the midpoint of Z1 and Z2.
Cpx cross_ratio_at(const WebPoint& p);

struct CurvatureEstimate {
  Cpx value;              // Richardson-extrapolated Blaschke curvature
  double h;               // outer step of the (h, h/2) pair
  double error_estimate;  // |K(h/2) - K(h)| / 3
  std::string subweb;
};

/// Blaschke curvature of the 3-web of the given slope fields at the base
/// point: K with d(gamma) = K dx^dz, where the normalized web 1-forms are
/// omega_i = (dz - p_i dx)/((p_i - p_j)(p_i - p_k)) and gamma is the unique
/// 1-form with d(omega_i) = gamma ^ omega_i.  All derivatives are central
/// differences at steps h and h/2 with Richardson pairing.
CurvatureEstimate blaschke_curvature(const std::array<SlopeField, 3>& fields, Cpx x, Cpx z,
                                     double h);

struct HexagonResult {
  double defect;        // closure distance at the given h
  double defect_half;   // at h/2
  double fitted_order;  // log2(defect(h)/defect(h/2)); capped when closed
  bool closed_to_tolerance = false;
};

/// Traverses the six-leg closure hexagon spanned by the three foliations at
/// scale h and reports the closure defect and its scaling order.
HexagonResult hexagon_closure_defect(const std::array<SlopeField, 3>& fields, Cpx x, Cpx z,
                                     double h);

/// The four 3-subwebs of (infinity, Z0, Z1, Z2). Subwebs containing the
/// fibration are computed in the swapped chart (z as the base coordinate),
/// where the slope roles are reciprocal.
struct Subweb {
  std::array<SlopeField, 3> fields;
  bool swapped_chart = false;
  std::string name;
};
std::vector<Subweb> subwebs_at(Cpx t, Cpx x, Cpx z);

struct PointCertificate {
  Cpx x, z;
  Cpx cross_ratio;
  std::array<CurvatureEstimate, 4> curvatures;
  std::array<HexagonResult, 4> hexagons;
  bool pass = false;
};

struct ParallelizabilityReport {
  std::vector<PointCertificate> points;
  size_t excluded_near_delta = 0;
  size_t excluded_degenerate = 0;
  double max_cross_ratio_defect = 0.0;  // |cr + 1|
  double max_curvature_over_tol = 0.0;  // |K| / (10 err + floor)
  double min_fitted_order = 0.0;
  bool verdict = false;
};

struct RegionSpec {
  double xmin = -2.5, xmax = 2.5;
  double zmin = -2.5, zmax = 2.5;
  double imag_band = 0.8;   // imaginary parts drawn from [-band, band]
  double exclusion = 1e-2;  // tube radius around Delta and singular fibers
};

/// Samples the region, excludes Delta tubes, singular fibers and slope
/// collisions, and certifies cross-ratio, curvature and hexagon closure at
/// every kept point.  With use_control_web the non-hexagonal control web is
/// tested instead, and the verdict comes out false.
ParallelizabilityReport parallelizability_report(Cpx t, const RegionSpec& region, int n_points,
                                                 uint64_t seed, bool use_control_web = false,
                                                 double curvature_floor = 1e-7,
                                                 double order_threshold = 3.5);

}  // namespace s1web::webgeo
