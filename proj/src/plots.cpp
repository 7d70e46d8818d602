#include "s1web/plots.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "s1web/moebius.hpp"
#include "s1web/ode.hpp"
#include "s1web/riccati.hpp"
#include "s1web/sections.hpp"

namespace s1web::plots {

namespace {

using Cpx = std::complex<double>;

struct Polyline {
  std::vector<std::pair<double, double>> pts;
  std::string color;
  double width = 1.0;
};

// Minimal standalone SVG writer with a fixed viewport mapping.
void write_svg(const std::string& path, const std::vector<Polyline>& lines,
               const std::string& title, double xmin, double xmax, double ymin, double ymax) {
  const double W = 720, H = 540, margin = 42;
  auto sx = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (W - 2 * margin); };
  auto sy = [&](double y) { return H - margin - (y - ymin) / (ymax - ymin) * (H - 2 * margin); };

  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  os.precision(8);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << title
     << "</text>\n";
  // axes
  os << "<line x1=\"" << sx(xmin) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(xmax) << "\" y2=\""
     << sy(0) << "\" stroke=\"#bbbbbb\"/>\n";
  os << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(ymin) << "\" x2=\"" << sx(0) << "\" y2=\""
     << sy(ymax) << "\" stroke=\"#bbbbbb\"/>\n";
  for (const auto& pl : lines) {
    if (pl.pts.size() == 1) {
      os << "<circle cx=\"" << sx(pl.pts[0].first) << "\" cy=\"" << sy(pl.pts[0].second)
         << "\" r=\"3\" fill=\"" << pl.color << "\"/>\n";
      continue;
    }
    os << "<polyline fill=\"none\" stroke=\"" << pl.color << "\" stroke-width=\"" << pl.width
       << "\" points=\"";
    for (auto [x, y] : pl.pts) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      os << sx(x) << "," << sy(std::clamp(y, ymin, ymax)) << " ";
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
}

std::string join_path(const std::string& dir, const std::string& name) {
  if (dir.empty() || dir == ".") return name;
  return dir + "/" + name;
}

std::vector<std::string> plot_discriminant(const cfg::SuiteConfig& c) {
  Cpx t = c.t;
  std::string csv_path = join_path(c.plot_dir, "discriminant.csv");
  std::string svg_path = join_path(c.plot_dir, "discriminant.svg");
  std::ofstream csv(csv_path);
  csv << "# u, re(z1), im(z1), re(z2), im(z2), re(z3), im(z3), re(z4), im(z4): "
         "roots of the 2-web discriminant quartic Delta(u, z) over a real u sweep\n";
  csv.precision(12);

  std::vector<Polyline> curves(4);
  const char* colors[4] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  for (int k = 0; k < 4; ++k) curves[k].color = colors[k];

  std::vector<Cpx> prev;
  const int n = 320;
  for (int i = 0; i <= n; ++i) {
    double u = c.region[0] + (c.region[1] - c.region[0]) * i / n;
    double su = std::max(1.0, std::abs(u));
    if (std::abs(u) < 5e-3 || std::abs(u - 1.0) < 5e-3 * su || std::abs(Cpx(u) - t) < 5e-3 * su)
      continue;
    auto roots = web::delta_roots(u, t);
    if (roots.size() != 4) continue;
    // continuity matching against the previous column
    if (!prev.empty()) {
      std::vector<Cpx> matched(4);
      std::vector<bool> used(4, false);
      for (int k = 0; k < 4; ++k) {
        int best = -1;
        double bd = 1e300;
        for (int m = 0; m < 4; ++m) {
          if (used[m]) continue;
          double d = std::abs(roots[m] - prev[k]);
          if (d < bd) {
            bd = d;
            best = m;
          }
        }
        matched[k] = roots[best];
        used[best] = true;
      }
      roots = matched;
    }
    prev = roots;
    csv << u;
    for (int k = 0; k < 4; ++k) csv << ", " << roots[k].real() << ", " << roots[k].imag();
    csv << "\n";
    for (int k = 0; k < 4; ++k)
      if (std::abs(roots[k].imag()) < 1e-6)
        curves[k].pts.push_back({u, roots[k].real()});
      else
        curves[k].pts.push_back({u, std::nan("")});
  }
  write_svg(svg_path, curves, "discriminant quartic roots z(u), real locus", c.region[0],
            c.region[1], c.region[2], c.region[3]);
  return {csv_path, svg_path};
}

std::vector<std::string> plot_leaves(const cfg::SuiteConfig& c) {
  Cpx t = c.t;
  std::string csv_path = join_path(c.plot_dir, "leaves.csv");
  std::string svg_path = join_path(c.plot_dir, "leaves.svg");
  std::ofstream csv(csv_path);
  csv << "# kind, x, z: integrated Riccati leaves (kind=leaf<n>) and the three special "
         "conics f0, f1, ft over a real x sweep\n";
  csv.precision(12);

  std::vector<Polyline> lines;
  double x0 = 2.0, x_lo = 1.15, x_hi = c.region[1] + 1.0;

  int leaf_id = 0;
  for (double z0 : {-1.5, -0.6, 0.3, 0.9, 1.7, 2.6}) {
    Polyline pl;
    pl.color = "#777777";
    auto rhs = [&](double s, Cpx z) { return riccati::slope_Z0(s, z); };
    // sweep right then left from x0, recording the real trace
    for (int dir = 0; dir < 2; ++dir) {
      Cpx z = z0;
      double target = dir == 0 ? x_hi : x_lo;
      const int steps = 160;
      std::vector<std::pair<double, double>> part;
      part.push_back({x0, z.real()});
      bool ok = true;
      for (int k = 1; k <= steps && ok; ++k) {
        double a = x0 + (target - x0) * (k - 1) / steps;
        double b = x0 + (target - x0) * k / steps;
        try {
          z = ode::integrate_dopri5(rhs, z, a, b, 1e-10, 1e-10);
        } catch (const std::exception&) {
          ok = false;
          break;
        }
        if (std::abs(z) > 40.0) break;
        part.push_back({b, z.real()});
      }
      if (dir == 1) std::reverse(part.begin(), part.end());
      if (dir == 1) {
        part.insert(part.end(), pl.pts.begin(), pl.pts.end());
        pl.pts = part;
      } else {
        pl.pts = part;
      }
    }
    for (auto [x, zz] : pl.pts) csv << "leaf" << leaf_id << ", " << x << ", " << zz << "\n";
    ++leaf_id;
    lines.push_back(pl);
  }

  // special conics: f0 = 0 -> z = 1 +- sqrt(1-x); f1 = 0 -> z = +-sqrt(x);
  // ft = 0 -> z = x +- sqrt(x^2 - x)
  auto emit_branch = [&](const std::string& kind, const char* color, auto fn, double lo,
                         double hi) {
    Polyline pl;
    pl.color = color;
    pl.width = 1.8;
    const int n = 240;
    for (int i = 0; i <= n; ++i) {
      double x = lo + (hi - lo) * i / n;
      Cpx z = fn(x);
      if (std::abs(z.imag()) > 1e-9) continue;
      pl.pts.push_back({x, z.real()});
      csv << kind << ", " << x << ", " << z.real() << "\n";
    }
    lines.push_back(pl);
  };
  emit_branch("f0+", "#d62728", [](double x) { return Cpx(1.0) + std::sqrt(Cpx(1.0 - x)); },
              c.region[0], 1.0);
  emit_branch("f0-", "#d62728", [](double x) { return Cpx(1.0) - std::sqrt(Cpx(1.0 - x)); },
              c.region[0], 1.0);
  emit_branch("f1+", "#2ca02c", [](double x) { return std::sqrt(Cpx(x)); }, 0.0, c.region[1]);
  emit_branch("f1-", "#2ca02c", [](double x) { return -std::sqrt(Cpx(x)); }, 0.0, c.region[1]);
  emit_branch("ft+", "#1f77b4",
              [](double x) { return Cpx(x) + std::sqrt(Cpx(x * x - x)); }, 1.0, c.region[1]);
  emit_branch("ft-", "#1f77b4",
              [](double x) { return Cpx(x) - std::sqrt(Cpx(x * x - x)); }, 1.0, c.region[1]);

  write_svg(svg_path, lines, "Riccati leaves and the special conics f0, f1, ft", c.region[0],
            std::max(c.region[1], x_hi), -3.0, 4.0);
  return {csv_path, svg_path};
}

std::vector<std::string> plot_web(const cfg::SuiteConfig& c) {
  Cpx t = c.t;
  std::string csv_path = join_path(c.plot_dir, "web.csv");
  std::string svg_path = join_path(c.plot_dir, "web.svg");
  std::ofstream csv(csv_path);
  csv << "# kind, x, z: the two section graphs through a marked generic point and "
         "through a tangency point on Delta\n";
  csv.precision(12);

  std::vector<Polyline> lines;
  auto draw_graphs = [&](Cpx u, Cpx z, const char* c1, const char* c2, const std::string& tag) {
    Cpx v = std::sqrt(ec::cubic_rhs(u, t));
    auto ws = web::sections_through(u, v, moebius::RSP(z), t);
    int idx = 0;
    for (const auto& sol : ws.solutions) {
      Polyline pl;
      pl.color = idx == 0 ? c1 : c2;
      pl.width = idx == 0 ? 2.2 : 1.2;
      const int n = 300;
      for (int i = 0; i <= n; ++i) {
        double x = 1.05 + (4.0 - 1.05) * i / n;
        Cpx y = std::sqrt(ec::cubic_rhs(Cpx(x), t));
        auto val = web::section_value(sol.param, ec::CurvePoint::affine(x, y), t);
        if (val.is_infinity()) continue;
        Cpx zz = val.value();
        if (std::abs(zz.imag()) > 2e-2 || std::abs(zz) > 8.0) continue;
        pl.pts.push_back({x, zz.real()});
        csv << tag << "_s" << idx << ", " << x << ", " << zz.real() << "\n";
      }
      lines.push_back(pl);
      ++idx;
    }
    lines.push_back(Polyline{{{u.real(), z.real()}}, "#000000", 1.0});
  };

  // a generic marked point and a point on the discriminant
  draw_graphs(2.5, 0.4, "#1f77b4", "#d62728", "generic");
  auto roots = web::delta_roots(2.5, t);
  Cpx z_tangent = roots.empty() ? Cpx(0.0) : roots[0];
  for (Cpx r : roots)
    if (std::abs(r.imag()) < 1e-9) z_tangent = r;
  draw_graphs(2.5, z_tangent, "#2ca02c", "#9467bd", "tangency");

  write_svg(svg_path, lines, "2-web sections through a marked point (tangency on Delta)", 1.0,
            4.0, -3.0, 3.0);
  return {csv_path, svg_path};
}

std::vector<std::string> plot_orbits(const cfg::SuiteConfig& c) {
  std::string csv_path = join_path(c.plot_dir, "orbits.csv");
  std::string svg_path = join_path(c.plot_dir, "orbits.svg");
  std::ofstream csv(csv_path);
  csv << "# seed_re, seed_im, orbit_size, re, im (one row per orbit element; points at "
         "infinity omitted from the scatter): orbits of <-z, 1/z>\n";
  csv.precision(12);

  std::vector<Polyline> dots;
  auto add_orbit = [&](Cpx seed, const char* color) {
    auto orbit = moebius::gamma_orbit(moebius::RSP(seed));
    for (const auto& p : orbit) {
      csv << seed.real() << ", " << seed.imag() << ", " << orbit.size() << ", ";
      if (p.is_infinity()) {
        csv << "inf, inf\n";
        continue;
      }
      Cpx v = p.value();
      csv << v.real() << ", " << v.imag() << "\n";
      dots.push_back(Polyline{{{v.real(), v.imag()}}, color, 1.0});
    }
  };
  // unit circle reference
  Polyline circle;
  circle.color = "#cccccc";
  for (int i = 0; i <= 128; ++i) {
    double th = 2.0 * M_PI * i / 128;
    circle.pts.push_back({std::cos(th), std::sin(th)});
  }
  dots.push_back(circle);

  add_orbit({2.0, 0.0}, "#1f77b4");
  add_orbit({0.6, 0.4}, "#2ca02c");
  add_orbit({1.0, 0.0}, "#d62728");   // special orbit {1, -1}
  add_orbit({0.0, 1.0}, "#9467bd");   // special orbit {i, -i}
  add_orbit({0.0, 0.0}, "#8c564b");   // special orbit {0, inf}
  (void)c;

  write_svg(svg_path, dots, "orbits of the dihedral group <-z, 1/z> on P^1", -2.6, 2.6, -2.0,
            2.0);
  return {csv_path, svg_path};
}

}  // namespace

std::vector<std::string> emit_plot(const std::string& what, const cfg::SuiteConfig& config) {
  if (what == "discriminant") return plot_discriminant(config);
  if (what == "leaves") return plot_leaves(config);
  if (what == "web") return plot_web(config);
  if (what == "orbits") return plot_orbits(config);
  throw cfg::ConfigError("emit_plot: unknown figure '" + what + "'");
}

}  // namespace s1web::plots
