#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>

namespace s1web::ode {

struct IntegrationStats {
  size_t accepted = 0;
  size_t rejected = 0;
  double min_step = 0.0;
};

struct StepSizeCollapse : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dormand-Prince 5(4) over a real parameter with complex state.
/// rhs(s, y) -> dy/ds; observer (optional) is called after accepted steps.
template <class Rhs, class Observer>
std::complex<double> integrate_dopri5(Rhs&& rhs, std::complex<double> y, double s0, double s1,
                                      double rel_tol, double abs_tol, IntegrationStats* stats,
                                      Observer&& observer) {
  using Cpx = std::complex<double>;
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  double span = s1 - s0;
  if (span == 0.0) return y;
  double dir = span > 0 ? 1.0 : -1.0;
  double h = dir * std::max(1e-8, std::abs(span) / 16.0);
  double s = s0;
  double hmin = std::abs(span) * 1e-14;
  Cpx k1 = rhs(s, y);
  size_t guard = 0;

  while (dir * (s1 - s) > 0.0) {
    if (++guard > 2000000) throw StepSizeCollapse("integrate_dopri5: too many steps");
    if (dir * (s + h - s1) > 0.0) h = s1 - s;

    Cpx k2 = rhs(s + c2 * h, y + h * (a21 * k1));
    Cpx k3 = rhs(s + c3 * h, y + h * (a31 * k1 + a32 * k2));
    Cpx k4 = rhs(s + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    Cpx k5 = rhs(s + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    Cpx k6 = rhs(s + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    Cpx ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    Cpx k7 = rhs(s + h, ynew);
    Cpx err_v = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    double sc = abs_tol + rel_tol * std::max(std::abs(y), std::abs(ynew));
    double err = std::abs(err_v) / sc;

    if (err <= 1.0) {
      s += h;
      y = ynew;
      k1 = k7;
      if (stats) {
        ++stats->accepted;
        stats->min_step = stats->min_step == 0.0 ? std::abs(h)
                                                 : std::min(stats->min_step, std::abs(h));
      }
      observer(s, y);
    } else if (stats) {
      ++stats->rejected;
    }
    double fac = 0.9 * std::pow(err > 0 ? 1.0 / err : 1e4, 0.2);
    h *= std::clamp(fac, 0.2, 5.0);
    if (std::abs(h) < hmin)
      throw StepSizeCollapse("integrate_dopri5: step size collapsed");
  }
  return y;
}

template <class Rhs>
std::complex<double> integrate_dopri5(Rhs&& rhs, std::complex<double> y, double s0, double s1,
                                      double rel_tol = 1e-12, double abs_tol = 1e-12,
                                      IntegrationStats* stats = nullptr) {
  return integrate_dopri5(std::forward<Rhs>(rhs), y, s0, s1, rel_tol, abs_tol, stats,
                          [](double, std::complex<double>) {});
}

}  // namespace s1web::ode
