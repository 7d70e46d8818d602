#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "s1web/moebius.hpp"
#include "s1web/ode.hpp"

namespace s1web::transport {

using Cpx = std::complex<double>;
using moebius::MoebiusMap;
using moebius::RSP;

struct LineTo {
  Cpx to;
};
struct ArcTo {
  Cpx center;
  double radius;
  double theta0, theta1;  // radians; signed sweep theta1 - theta0
};
using PathSegment = std::variant<LineTo, ArcTo>;

/// Piecewise path in the x plane, anchored at a base point of the curve.
struct PathSpec {
  Cpx x_start;
  Cpx y_start;
  std::vector<PathSegment> segments;
};

Cpx path_end(const PathSpec& path);
double path_length(const PathSpec& path);
bool path_is_x_closed(const PathSpec& path, double tol = 1e-9);

/// Winding number of the path around a point (0 for non-closed paths).
int winding_number(const PathSpec& path, Cpx around);

/// Branch points with odd winding; the path closes on the curve iff the
/// count is even.
std::vector<Cpx> encircled_branch_points(const PathSpec& path, Cpx t);
bool closed_on_curve(const PathSpec& path, Cpx t);

/// Smallest distance from the path to any of {0, 1, t}.
double path_clearance(const PathSpec& path, Cpx t);

/// Lollipop loop from base around the given points: segment to a circle
/// enclosing exactly them, the full circle, and the segment back.
PathSpec make_loop_around(Cpx base_x, Cpx base_y, const std::vector<Cpx>& enclose, Cpx t,
                          double radius_factor = 0.45);

/// Concatenation (second path must start where the first ends).
PathSpec concat(const PathSpec& a, const PathSpec& b);

struct ContinuationResult {
  Cpx y_end;
  ode::IntegrationStats stats;
};

/// Continuous branch of sqrt(x(x-1)(x-t)) along the path from y_start.
ContinuationResult continue_y(const PathSpec& path, Cpx t, double tol = 1e-12);

struct LeafResult {
  RSP z_end;
  double f_drift = 0.0;  // max chordal distance of F from its start value
  ode::IntegrationStats stats;
};

/// Riccati leaf transport dz/dx = Z0 along the path, switching between the
/// z and 1/z charts whenever the fiber value leaves the unit disk.
LeafResult integrate_leaf(const PathSpec& path, RSP z0, Cpx t, double tol = 1e-11);

struct TransportResult {
  std::vector<RSP> tracer_images;
  MoebiusMap fitted;
  double fit_residual = 0.0;  // chordal error on a held-out validation tracer
  double f_drift = 0.0;       // max over tracers, per unit path length
  double path_len = 0.0;
  moebius::TorsionLabel label = moebius::TorsionLabel::other;
  double label_distance = 0.0;  // projective distance to the matched generator
};

inline std::vector<RSP> default_tracers() {
  return {RSP(Cpx(2.0, 0.0)), RSP(Cpx(3.0, 1.0)), RSP(Cpx(-1.0, 0.0))};
}

/// Transports three tracers around a loop closed on the curve, fits the
/// Moebius map, and classifies it against the fiber monodromy generators.
TransportResult loop_monodromy(const PathSpec& loop, Cpx t,
                               const std::vector<RSP>& tracers = default_tracers(),
                               double tol = 1e-11);

}  // namespace s1web::transport
