#include "s1web/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "s1web/complex_io.hpp"
#include "s1web/elliptic.hpp"

namespace s1web::cfg {

std::vector<std::string> default_t_sweep() { return {"2", "4", "1+i", "-3"}; }

void set_t(SuiteConfig& c, const std::string& literal) {
  auto g = exact::GaussianRational::parse(literal);
  if (!g) throw ConfigError("cannot parse t: '" + literal + "'");
  c.t_literal = literal;
  c.t_exact = *g;
  c.t = g->to_complex();
  if (g->is_zero() || *g == exact::GaussianRational(1))
    throw ConfigError("t must avoid {0, 1}: the curve degenerates");
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  size_t b = s.find_last_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

}  // namespace

transport::PathSpec parse_path_literal(const std::string& literal,
                                       const std::complex<double>& t) {
  transport::PathSpec path{};
  bool has_base = false;
  for (const std::string& cmd : split(literal, ';')) {
    if (cmd.empty()) continue;
    std::istringstream is(cmd);
    std::string op;
    is >> op;
    if (op == "base") {
      std::string v;
      is >> v;
      auto z = parse_complex(v);
      if (!z) throw ConfigError("path: bad base point '" + v + "'");
      path.x_start = *z;
      path.y_start = std::sqrt(ec::cubic_rhs(*z, t));
      has_base = true;
    } else if (op == "line") {
      std::string v;
      is >> v;
      auto z = parse_complex(v);
      if (!z) throw ConfigError("path: bad line target '" + v + "'");
      path.segments.push_back(transport::LineTo{*z});
    } else if (op == "arc") {
      std::string cv;
      double r, d0, d1;
      is >> cv >> r >> d0 >> d1;
      if (!is) throw ConfigError("path: arc wants <center> <radius> <deg0> <deg1>");
      auto z = parse_complex(cv);
      if (!z) throw ConfigError("path: bad arc center '" + cv + "'");
      path.segments.push_back(
          transport::ArcTo{*z, r, d0 * M_PI / 180.0, d1 * M_PI / 180.0});
    } else {
      throw ConfigError("path: unknown command '" + op + "'");
    }
  }
  if (!has_base || path.segments.empty()) throw ConfigError("path: needs a base and segments");
  return path;
}

void apply_config_file(SuiteConfig& c, const std::string& filename) {
  std::ifstream is(filename);
  if (!is) throw ConfigError("cannot open config file " + filename);
  std::string line;
  while (std::getline(is, line)) {
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    size_t eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("config: expected key=value, got '" + s + "'");
    std::string key = trim(s.substr(0, eq));
    std::string val = trim(s.substr(eq + 1));
    if (key == "t") {
      set_t(c, val);
    } else if (key == "mode") {
      if (val == "numeric")
        c.mode = Mode::numeric;
      else if (val == "exact")
        c.mode = Mode::exact;
      else if (val == "both")
        c.mode = Mode::both;
      else
        throw ConfigError("config: mode must be numeric|exact|both");
    } else if (key == "samples") {
      c.samples = std::stol(val);
    } else if (key == "seed") {
      c.seed = std::stoull(val);
    } else if (key == "out") {
      c.out_path = val;
    } else if (key == "plot") {
      for (auto& p : split(val, ',')) c.plots.push_back(p);
    } else if (key == "plot_dir") {
      c.plot_dir = val;
    } else if (key == "control_web") {
      c.control_web = (val == "1" || val == "true" || val == "yes");
    } else if (key == "region") {
      auto parts = split(val, ',');
      if (parts.size() != 4) throw ConfigError("config: region wants xmin,xmax,zmin,zmax");
      for (int k = 0; k < 4; ++k) c.region[k] = std::stod(parts[k]);
    } else if (key.rfind("tol.", 0) == 0) {
      c.tolerances[key.substr(4)] = std::stod(val);
    } else if (key.rfind("path.", 0) == 0) {
      c.custom_loop_literals.push_back(val);
    } else {
      throw ConfigError("config: unknown key '" + key + "'");
    }
  }
}

void validate(const SuiteConfig& c) {
  if (std::abs(c.t) < 1e-12 || std::abs(c.t - 1.0) < 1e-12)
    throw ConfigError("t must avoid {0, 1}");
  if (c.samples < 1) throw ConfigError("samples must be >= 1");
  for (const auto& [name, v] : c.tolerances)
    if (!(v > 0.0)) throw ConfigError("tolerance '" + name + "' must be positive");
  if (!(c.region[0] < c.region[1]) || !(c.region[2] < c.region[3]))
    throw ConfigError("region must satisfy xmin < xmax and zmin < zmax");
  for (const auto& p : c.plots)
    if (p != "leaves" && p != "web" && p != "discriminant" && p != "orbits")
      throw ConfigError("plot must be one of leaves, web, discriminant, orbits");
}

nlohmann::ordered_json SuiteConfig::echo() const {
  nlohmann::ordered_json j;
  j["t"] = t_literal;
  j["mode"] = mode == Mode::numeric ? "numeric" : (mode == Mode::exact ? "exact" : "both");
  j["samples"] = samples;
  j["seed"] = seed;
  j["region"] = {region[0], region[1], region[2], region[3]};
  j["control_web"] = control_web;
  if (!tolerances.empty()) {
    nlohmann::ordered_json jt;
    for (const auto& [k, v] : tolerances) jt[k] = v;
    j["tolerances"] = jt;
  }
  if (!plots.empty()) j["plots"] = plots;
  if (!custom_loop_literals.empty()) j["paths"] = custom_loop_literals;
  return j;
}

}  // namespace s1web::cfg
