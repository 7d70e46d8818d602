#include "s1web/leaf_transport.hpp"

#include <cmath>
#include <stdexcept>

#include "s1web/riccati.hpp"

namespace s1web::transport {

namespace {

struct SegGeom {
  Cpx start;
  // position and velocity at parameter s in [0, 1]
  std::function<Cpx(double)> pos;
  std::function<Cpx(double)> vel;
  double length;
};

SegGeom segment_geometry(Cpx from, const PathSegment& seg) {
  if (const auto* line = std::get_if<LineTo>(&seg)) {
    Cpx d = line->to - from;
    return {from, [from, d](double s) { return from + s * d; }, [d](double) { return d; },
            std::abs(d)};
  }
  const auto& arc = std::get<ArcTo>(seg);
  Cpx c = arc.center;
  double r = arc.radius, a0 = arc.theta0, a1 = arc.theta1;
  Cpx expected_start = c + std::polar(r, a0);
  if (std::abs(expected_start - from) > 1e-6 * std::max(1.0, r))
    throw std::invalid_argument("path arc does not start at the current point");
  return {from,
          [c, r, a0, a1](double s) { return c + std::polar(r, a0 + s * (a1 - a0)); },
          [r, a0, a1](double s) {
            double th = a0 + s * (a1 - a0);
            return Cpx(0.0, 1.0) * std::polar(r, th) * (a1 - a0);
          },
          r * std::abs(a1 - a0)};
}

template <class Fn>
void for_each_segment(const PathSpec& path, Fn&& fn) {
  Cpx cur = path.x_start;
  for (const auto& seg : path.segments) {
    SegGeom g = segment_geometry(cur, seg);
    fn(g);
    cur = g.pos(1.0);
  }
}

}  // namespace

Cpx path_end(const PathSpec& path) {
  Cpx end = path.x_start;
  for_each_segment(path, [&](const SegGeom& g) { end = g.pos(1.0); });
  return end;
}

double path_length(const PathSpec& path) {
  double len = 0.0;
  for_each_segment(path, [&](const SegGeom& g) { len += g.length; });
  return len;
}

bool path_is_x_closed(const PathSpec& path, double tol) {
  return std::abs(path_end(path) - path.x_start) <= tol * std::max(1.0, std::abs(path.x_start));
}

int winding_number(const PathSpec& path, Cpx around) {
  double total = 0.0;
  for_each_segment(path, [&](const SegGeom& g) {
    const int n = 512;
    Cpx prev = g.pos(0.0) - around;
    for (int k = 1; k <= n; ++k) {
      Cpx cur = g.pos(static_cast<double>(k) / n) - around;
      total += std::arg(cur / prev);
      prev = cur;
    }
  });
  return static_cast<int>(std::lround(total / (2.0 * M_PI)));
}

std::vector<Cpx> encircled_branch_points(const PathSpec& path, Cpx t) {
  std::vector<Cpx> out;
  for (Cpx b : {Cpx(0.0), Cpx(1.0), t})
    if (winding_number(path, b) % 2 != 0) out.push_back(b);
  return out;
}

bool closed_on_curve(const PathSpec& path, Cpx t) {
  return path_is_x_closed(path) && encircled_branch_points(path, t).size() % 2 == 0;
}

double path_clearance(const PathSpec& path, Cpx t) {
  double best = 1e300;
  for_each_segment(path, [&](const SegGeom& g) {
    const int n = 256;
    for (int k = 0; k <= n; ++k) {
      Cpx p = g.pos(static_cast<double>(k) / n);
      for (Cpx b : {Cpx(0.0), Cpx(1.0), t}) best = std::min(best, std::abs(p - b));
    }
  });
  return best;
}

PathSpec make_loop_around(Cpx base_x, Cpx base_y, const std::vector<Cpx>& enclose, Cpx t,
                          double radius_factor) {
  if (enclose.empty()) {
    // Null loop: a small circle around the base point itself.
    double r = 0.05;
    PathSpec p{base_x, base_y, {}};
    p.segments.push_back(LineTo{base_x + r});
    p.segments.push_back(ArcTo{base_x, r, 0.0, 2.0 * M_PI});
    p.segments.push_back(LineTo{base_x});
    return p;
  }
  Cpx center = 0.0;
  for (Cpx e : enclose) center += e;
  center /= static_cast<double>(enclose.size());

  double r_needed = 0.0;
  for (Cpx e : enclose) r_needed = std::max(r_needed, std::abs(e - center));
  double r_max = 1e300;
  for (Cpx b : {Cpx(0.0), Cpx(1.0), t}) {
    bool inside = false;
    for (Cpx e : enclose) inside = inside || std::abs(e - b) < 1e-12;
    if (!inside) r_max = std::min(r_max, std::abs(b - center));
  }
  double r = r_needed + radius_factor * (r_max - r_needed);
  if (r <= r_needed || r >= r_max)
    throw std::invalid_argument("make_loop_around: cannot separate the requested points");

  // Entry point on the circle along the ray from the base.
  double phi = std::arg(base_x - center);
  Cpx entry = center + std::polar(r, phi);
  PathSpec p{base_x, base_y, {}};
  p.segments.push_back(LineTo{entry});
  p.segments.push_back(ArcTo{center, r, phi, phi + 2.0 * M_PI});
  p.segments.push_back(LineTo{base_x});
  return p;
}

PathSpec concat(const PathSpec& a, const PathSpec& b) {
  if (std::abs(path_end(a) - b.x_start) > 1e-9)
    throw std::invalid_argument("concat: paths do not chain");
  PathSpec out = a;
  out.segments.insert(out.segments.end(), b.segments.begin(), b.segments.end());
  return out;
}

ContinuationResult continue_y(const PathSpec& path, Cpx t, double tol) {
  if (path_clearance(path, t) < 1e-4)
    throw std::invalid_argument("continue_y: path violates branch-point clearance");
  ContinuationResult res;
  Cpx y = path.y_start;
  for_each_segment(path, [&](const SegGeom& g) {
    auto rhs = [&](double s, Cpx yy) {
      Cpx x = g.pos(s);
      Cpx gp = 3.0 * x * x - 2.0 * (1.0 + t) * x + t;
      return gp / (2.0 * yy) * g.vel(s);
    };
    y = ode::integrate_dopri5(rhs, y, 0.0, 1.0, tol, tol, &res.stats);
  });
  res.y_end = y;
  return res;
}

namespace {

// Fiber value in one of the two standard charts: z itself, or w = 1/z.
struct FiberState {
  Cpx v;
  bool inverted;

  RSP to_rsp() const { return inverted ? RSP{Cpx(1.0), v} : RSP{v, Cpx(1.0)}; }
};

FiberState state_from_rsp(const RSP& z) {
  if (std::abs(z.n) <= std::abs(z.d)) return {z.n / z.d, false};
  return {z.d / z.n, true};
}

struct ChartSwitchSignal {
  double s;
  Cpx v;
};

}  // namespace

LeafResult integrate_leaf(const PathSpec& path, RSP z0, Cpx t, double tol) {
  LeafResult res;
  FiberState st = state_from_rsp(z0);
  const RSP f_start = riccati::first_integral(path.x_start, z0);
  double drift = 0.0;

  for_each_segment(path, [&](const SegGeom& g) {
    double s = 0.0;
    int switches = 0;
    while (s < 1.0) {
      auto rhs = [&](double ss, Cpx v) {
        Cpx x = g.pos(ss);
        Cpx vel = g.vel(ss);
        if (!st.inverted) return riccati::slope_Z0(x, v) * vel;
        // w = 1/z obeys dw/dx = -(1 + 2(x-1)w - x w^2) / (4x(x-1)).
        return -(1.0 + 2.0 * (x - 1.0) * v - x * v * v) / (4.0 * x * (x - 1.0)) * vel;
      };
      auto observer = [&](double ss, Cpx v) {
        Cpx x = g.pos(ss);
        RSP z = st.inverted ? RSP{Cpx(1.0), v} : RSP{v, Cpx(1.0)};
        drift = std::max(drift, moebius::chordal(riccati::first_integral(x, z), f_start));
        if (std::abs(v) > 1.25) throw ChartSwitchSignal{ss, v};
      };
      try {
        st.v = ode::integrate_dopri5(rhs, st.v, s, 1.0, tol, tol, &res.stats, observer);
        s = 1.0;
      } catch (const ChartSwitchSignal& cs) {
        st.v = 1.0 / cs.v;
        st.inverted = !st.inverted;
        s = cs.s;
        if (++switches > 400) throw ode::StepSizeCollapse("integrate_leaf: chart thrashing");
      }
    }
  });

  res.z_end = st.to_rsp();
  res.f_drift = drift;
  return res;
}

TransportResult loop_monodromy(const PathSpec& loop, Cpx t, const std::vector<RSP>& tracers,
                               double tol) {
  if (!path_is_x_closed(loop))
    throw std::invalid_argument("loop_monodromy: path is not closed in the x plane");
  if (!closed_on_curve(loop, t))
    throw std::invalid_argument("loop_monodromy: odd branch count, loop does not close on C");
  if (tracers.size() < 3) throw std::invalid_argument("loop_monodromy: need three tracers");

  TransportResult res;
  res.path_len = path_length(loop);
  for (const auto& z : tracers) {
    LeafResult lr = integrate_leaf(loop, z, t, tol);
    res.tracer_images.push_back(lr.z_end);
    res.f_drift = std::max(res.f_drift, lr.f_drift / std::max(1e-12, res.path_len));
  }
  res.fitted = moebius::map_from_three_pairs(
      {tracers[0], tracers[1], tracers[2]},
      {res.tracer_images[0], res.tracer_images[1], res.tracer_images[2]});

  // Hold-out validation tracer.
  RSP probe(Cpx(0.5, -1.5));
  LeafResult lv = integrate_leaf(loop, probe, t, tol);
  res.fit_residual = moebius::chordal(res.fitted(probe), lv.z_end);

  res.label = moebius::classify_moebius(res.fitted, loop.x_start, 1e-5);
  if (res.label != moebius::TorsionLabel::other) {
    auto maps = moebius::fiber_monodromy_maps(loop.x_start);
    res.label_distance = moebius::proj_distance(res.fitted, maps.by_label(res.label));
  } else {
    res.label_distance = 1e300;
  }
  return res;
}

}  // namespace s1web::transport
