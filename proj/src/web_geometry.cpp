#include "s1web/web_geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "s1web/ode.hpp"
#include "s1web/rng.hpp"

namespace s1web::webgeo {

namespace {

constexpr double kLeafIntegrationTol = 1e-13;

}  // namespace

SlopeField riccati_field(Cpx t) {
  (void)t;
  return {[](Cpx x, Cpx z) { return riccati::slope_Z0(x, z); }, "Z0"};
}

std::array<SlopeField, 2> web_branch_fields(Cpx t, Cpx x_base, Cpx z_base) {
  web::SlopePair base = web::web_slopes_from_ode(x_base, z_base, t);
  auto make = [t](Cpx ref, const char* name) -> SlopeField {
    return {[t, ref](Cpx x, Cpx z) {
              web::SlopePair sp = web::web_slopes_from_ode(x, z, t);
              return std::abs(sp.z1 - ref) <= std::abs(sp.z2 - ref) ? sp.z1 : sp.z2;
            },
            name};
  };
  return {make(base.z1, "Z1"), make(base.z2, "Z2")};
}

std::array<SlopeField, 3> control_web_fields() {
  return {SlopeField{[](Cpx, Cpx) { return Cpx(0.0); }, "0"},
          SlopeField{[](Cpx, Cpx) { return Cpx(1.0); }, "1"},
          SlopeField{[](Cpx x, Cpx z) { return x + z; }, "x+z"}};
}

WebPoint assemble_web_point(Cpx u, Cpx v, Cpx z, Cpx t) {
  WebPoint p;
  p.x = u;
  p.z = z;
  p.y = v;
  web::SlopePair sp = web::web_slopes_from_ode(u, z, t);
  p.slopes = {RSP::infinity(), RSP(riccati::slope_Z0(u, z)), RSP(sp.z1), RSP(sp.z2)};
  p.on_delta = sp.tangent;
  return p;
}

Cpx cross_ratio_at(const WebPoint& p) {
  if (p.on_delta) throw std::domain_error("cross_ratio_at: degenerate quadruple on Delta");
  return moebius::cross_ratio(p.slopes[0], p.slopes[1], p.slopes[2], p.slopes[3]);
}

namespace {

struct WebForms {
  // omega_i = a_i dx + b_i dz with a_i = -p_i / D_i, b_i = 1 / D_i.
  std::array<Cpx, 3> a, b;
};

WebForms eval_forms(const std::array<SlopeField, 3>& f, Cpx x, Cpx z) {
  Cpx p1 = f[0].eval(x, z), p2 = f[1].eval(x, z), p3 = f[2].eval(x, z);
  std::array<Cpx, 3> p{p1, p2, p3};
  WebForms w;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    Cpx D = (p[i] - p[j]) * (p[i] - p[k]);
    if (std::abs(D) < 1e-24)
      throw std::domain_error("blaschke_curvature: near-degenerate slopes");
    w.a[i] = -p[i] / D;
    w.b[i] = Cpx(1.0) / D;
  }
  return w;
}

// gamma = g dx + h dz solving g b_i - h a_i = c_i, c_i = d(b_i)/dx - d(a_i)/dz.
struct GammaVal {
  Cpx g, h;
};

GammaVal eval_gamma(const std::array<SlopeField, 3>& f, Cpx x, Cpx z, double step) {
  WebForms xp = eval_forms(f, x + step, z);
  WebForms xm = eval_forms(f, x - step, z);
  WebForms zp = eval_forms(f, x, z + step);
  WebForms zm = eval_forms(f, x, z - step);
  WebForms at = eval_forms(f, x, z);

  std::array<Cpx, 3> c;
  for (int i = 0; i < 3; ++i)
    c[i] = (xp.b[i] - xm.b[i]) / (2.0 * step) - (zp.a[i] - zm.a[i]) / (2.0 * step);

  // Pick the best-conditioned pair of the three consistent equations.
  int bi = 0, bj = 1;
  double best = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      double det = std::abs(at.b[i] * at.a[j] - at.b[j] * at.a[i]);
      if (det > best) {
        best = det;
        bi = i;
        bj = j;
      }
    }
  Cpx det = at.b[bi] * (-at.a[bj]) - at.b[bj] * (-at.a[bi]);
  if (std::abs(det) < 1e-24) throw std::domain_error("blaschke_curvature: singular form system");
  GammaVal gv;
  gv.g = (c[bi] * (-at.a[bj]) - c[bj] * (-at.a[bi])) / det;
  gv.h = (at.b[bi] * c[bj] - at.b[bj] * c[bi]) / det;
  return gv;
}

Cpx curvature_once(const std::array<SlopeField, 3>& f, Cpx x, Cpx z, double h) {
  GammaVal xp = eval_gamma(f, x + h, z, h);
  GammaVal xm = eval_gamma(f, x - h, z, h);
  GammaVal zp = eval_gamma(f, x, z + h, h);
  GammaVal zm = eval_gamma(f, x, z - h, h);
  // dgamma = (dh/dx - dg/dz) dx^dz
  return (xp.h - xm.h) / (2.0 * h) - (zp.g - zm.g) / (2.0 * h);
}

}  // namespace

CurvatureEstimate blaschke_curvature(const std::array<SlopeField, 3>& fields, Cpx x, Cpx z,
                                     double h) {
  Cpx kh = curvature_once(fields, x, z, h);
  Cpx kh2 = curvature_once(fields, x, z, h / 2.0);
  CurvatureEstimate est;
  est.value = (4.0 * kh2 - kh) / 3.0;
  est.h = h;
  est.error_estimate = std::abs(kh2 - kh) / 3.0;
  est.subweb = fields[0].name + "," + fields[1].name + "," + fields[2].name;
  return est;
}

namespace {

// z-value of the leaf of `field` anchored at (ax, az), continued to x.
Cpx leaf_value(const SlopeField& field, Cpx ax, Cpx az, Cpx x) {
  if (x == ax) return az;
  Cpx dir = x - ax;
  auto rhs = [&](double s, Cpx zz) {
    (void)s;
    return field.eval(ax + s * dir, zz) * dir;
  };
  return ode::integrate_dopri5(rhs, az, 0.0, 1.0, kLeafIntegrationTol, kLeafIntegrationTol);
}

struct HexPoint {
  Cpx x, z;
};

// From q along a leaf of f[s], find the intersection with the leaf of f[tg]
// through the base point O. Newton in the complex x plane.
HexPoint hexagon_leg(const std::array<SlopeField, 3>& f, const HexPoint& O, const HexPoint& q,
                     int s, int tg) {
  Cpx sq = f[s].eval(q.x, q.z);
  Cpx tO = f[tg].eval(O.x, O.z);
  if (std::abs(sq - tO) < 1e-14)
    throw std::domain_error("hexagon_leg: parallel leaves, no transversal intersection");
  // Linear-model initial guess for the intersection abscissa.
  Cpx x = (O.z - q.z + sq * q.x - tO * O.x) / (sq - tO);
  Cpx z_s = 0.0, z_t = 0.0;
  for (int it = 0; it < 12; ++it) {
    z_s = leaf_value(f[s], q.x, q.z, x);
    z_t = leaf_value(f[tg], O.x, O.z, x);
    Cpx D = z_s - z_t;
    double scale = std::max({1.0, std::abs(z_s), std::abs(z_t)});
    if (std::abs(D) <= 1e-13 * scale) break;
    Cpx Dp = f[s].eval(x, z_s) - f[tg].eval(x, z_t);
    if (std::abs(Dp) < 1e-14) throw std::domain_error("hexagon_leg: vanishing transversality");
    x -= D / Dp;
  }
  return {x, z_t};
}

double hexagon_defect_once(const std::array<SlopeField, 3>& f, Cpx x0, Cpx z0, double h) {
  HexPoint O{x0, z0};
  // Start on the leaf of f[0] through O, a parameter distance h away.
  HexPoint q{x0 + h, leaf_value(f[0], x0, z0, x0 + h)};
  HexPoint start = q;
  // Legs: along f[1] to L3, f[0] to L2, f[2] to L1, then repeat once.
  static constexpr int moves[6] = {1, 0, 2, 1, 0, 2};
  static constexpr int hits[6] = {2, 1, 0, 2, 1, 0};
  for (int leg = 0; leg < 6; ++leg) q = hexagon_leg(f, O, q, moves[leg], hits[leg]);
  return std::hypot(std::abs(q.x - start.x), std::abs(q.z - start.z));
}

}  // namespace

HexagonResult hexagon_closure_defect(const std::array<SlopeField, 3>& fields, Cpx x, Cpx z,
                                     double h) {
  HexagonResult r;
  r.defect = hexagon_defect_once(fields, x, z, h);
  r.defect_half = hexagon_defect_once(fields, x, z, h / 2.0);
  double floor = 1e-11 * std::max(1.0, std::abs(z));
  if (r.defect < floor && r.defect_half < floor) {
    r.closed_to_tolerance = true;
    r.fitted_order = 8.0;  // closure below measurement resolution
  } else {
    r.fitted_order = std::log2(r.defect / std::max(r.defect_half, 1e-300));
  }
  return r;
}

namespace {

SlopeField swap_chart(const SlopeField& f) {
  return {[f](Cpx zc, Cpx xc) { return 1.0 / f.eval(xc, zc); }, "1/" + f.name};
}

}  // namespace

std::vector<Subweb> subwebs_at(Cpx t, Cpx x, Cpx z) {
  SlopeField z0 = riccati_field(t);
  auto branches = web_branch_fields(t, x, z);
  SlopeField fib_swapped{[](Cpx, Cpx) { return Cpx(0.0); }, "1/inf"};

  std::vector<Subweb> out;
  out.push_back({{z0, branches[0], branches[1]}, false, "Z0,Z1,Z2"});
  out.push_back({{fib_swapped, swap_chart(z0), swap_chart(branches[0])}, true, "inf,Z0,Z1"});
  out.push_back({{fib_swapped, swap_chart(z0), swap_chart(branches[1])}, true, "inf,Z0,Z2"});
  out.push_back(
      {{fib_swapped, swap_chart(branches[0]), swap_chart(branches[1])}, true, "inf,Z1,Z2"});
  return out;
}

ParallelizabilityReport parallelizability_report(Cpx t, const RegionSpec& region, int n_points,
                                                 uint64_t seed, bool use_control_web,
                                                 double curvature_floor, double order_threshold) {
  ParallelizabilityReport rep;
  Rng rng(seed);
  const double h = 1e-2;
  rep.min_fitted_order = 1e300;

  int kept = 0;
  int attempts = 0;
  const int max_attempts = n_points * 60;
  while (kept < n_points && ++attempts < max_attempts) {
    Cpx x = rng.box(region.xmin, region.xmax, -region.imag_band, region.imag_band);
    Cpx z = rng.box(region.zmin, region.zmax, -region.imag_band, region.imag_band);

    if (use_control_web) {
      // Keep clear of the curvature zero line x + z = 1/2 of the control web.
      if (std::abs(x + z - 0.5) < 0.3) continue;
      if (std::abs(x + z) < 0.2 || std::abs(x + z - 1.0) < 0.2) continue;  // form poles
    } else {
      // Singular fibers of the web.
      double sx = std::max(1.0, std::abs(x));
      if (std::abs(x) < 0.1 || std::abs(x - 1.0) < 0.1 * sx || std::abs(x - t) < 0.1 * sx)
        continue;
      // Delta tube: measured through the slope gap, which vanishes on Delta.
      web::SlopePair sp = web::web_slopes_from_ode(x, z, t);
      if (std::abs(sp.z1 - sp.z2) < region.exclusion * 10.0) {
        ++rep.excluded_near_delta;
        continue;
      }
      // Slope collisions, including against the fibration and the swap charts.
      std::array<RSP, 4> sl{RSP::infinity(), RSP(riccati::slope_Z0(x, z)), RSP(sp.z1),
                            RSP(sp.z2)};
      bool degenerate = false;
      for (int i = 0; i < 4 && !degenerate; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (moebius::chordal(sl[i], sl[j]) < 0.05) degenerate = true;
      for (int i = 1; i < 4; ++i) {
        double a = std::abs(sl[i].value_or_huge());
        if (a < 0.02 || a > 50.0) degenerate = true;
      }
      if (degenerate) {
        ++rep.excluded_degenerate;
        continue;
      }
    }

    PointCertificate cert;
    cert.x = x;
    cert.z = z;
    bool point_ok = true;
    try {
      if (use_control_web) {
        auto f = control_web_fields();
        cert.cross_ratio = Cpx(0.0);
        for (int k = 0; k < 4; ++k) {
          if (k == 0) {
            cert.curvatures[k] = blaschke_curvature(f, x, z, h);
            cert.hexagons[k] = hexagon_closure_defect(f, x, z, h);
          } else {
            cert.curvatures[k] = cert.curvatures[0];
            cert.hexagons[k] = cert.hexagons[0];
          }
        }
        double tol_k = 10.0 * cert.curvatures[0].error_estimate + curvature_floor;
        point_ok = std::abs(cert.curvatures[0].value) <= tol_k &&
                   (cert.hexagons[0].closed_to_tolerance ||
                    cert.hexagons[0].fitted_order >= order_threshold);
        rep.max_curvature_over_tol =
            std::max(rep.max_curvature_over_tol, std::abs(cert.curvatures[0].value) / tol_k);
        rep.min_fitted_order = std::min(rep.min_fitted_order, cert.hexagons[0].fitted_order);
      } else {
        WebPoint wp = assemble_web_point(x, std::sqrt(ec::cubic_rhs(x, t)), z, t);
        cert.cross_ratio = cross_ratio_at(wp);
        rep.max_cross_ratio_defect =
            std::max(rep.max_cross_ratio_defect, std::abs(cert.cross_ratio + 1.0));
        auto subs = subwebs_at(t, x, z);
        for (size_t k = 0; k < subs.size(); ++k) {
          Cpx bx = subs[k].swapped_chart ? z : x;
          Cpx bz = subs[k].swapped_chart ? x : z;
          cert.curvatures[k] = blaschke_curvature(subs[k].fields, bx, bz, h);
          cert.curvatures[k].subweb = subs[k].name;
          cert.hexagons[k] = hexagon_closure_defect(subs[k].fields, bx, bz, h);
          double tol_k = 10.0 * cert.curvatures[k].error_estimate + curvature_floor;
          rep.max_curvature_over_tol =
              std::max(rep.max_curvature_over_tol, std::abs(cert.curvatures[k].value) / tol_k);
          rep.min_fitted_order = std::min(rep.min_fitted_order, cert.hexagons[k].fitted_order);
          if (std::abs(cert.curvatures[k].value) > tol_k) point_ok = false;
          if (!cert.hexagons[k].closed_to_tolerance &&
              cert.hexagons[k].fitted_order < order_threshold)
            point_ok = false;
        }
        if (std::abs(cert.cross_ratio + 1.0) > 1e-9) point_ok = false;
      }
    } catch (const std::exception&) {
      ++rep.excluded_degenerate;
      continue;
    }
    cert.pass = point_ok;
    rep.points.push_back(cert);
    ++kept;
  }

  rep.verdict = !rep.points.empty();
  for (const auto& c : rep.points) rep.verdict = rep.verdict && c.pass;
  if (use_control_web) rep.verdict = rep.points.empty() ? false : rep.verdict;
  return rep;
}

}  // namespace s1web::webgeo
