#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "s1web/gaussian_rational.hpp"
#include "s1web/leaf_transport.hpp"

namespace s1web::cfg {

enum class Mode { numeric, exact, both };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SuiteConfig {
  std::string t_literal = "2";
  exact::GaussianRational t_exact = exact::GaussianRational(2);
  std::complex<double> t{2.0, 0.0};
  Mode mode = Mode::both;
  long samples = 200;
  uint64_t seed = 7;
  std::map<std::string, double> tolerances;  // named overrides of the defaults
  double region[4] = {-2.5, 2.5, -2.5, 2.5};  // xmin, xmax, zmin, zmax
  std::string out_path;
  std::vector<std::string> plots;  // subset of {leaves, web, discriminant, orbits}
  std::string plot_dir = ".";
  bool control_web = false;
  std::vector<transport::PathSpec> custom_loops;
  std::vector<std::string> custom_loop_literals;

  double tol(const std::string& name, double fallback) const {
    auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
  }

  nlohmann::ordered_json echo() const;
};

/// Default t sweep used for cross-parameter regression checks.
std::vector<std::string> default_t_sweep();

/// Sets t from its literal form; throws ConfigError for t in {0, 1} or junk.
void set_t(SuiteConfig& c, const std::string& literal);

/// key=value file, '#' comments. Recognized keys: t, mode, samples, seed,
/// out, plot, plot_dir, control_web, region, tol.<name>, path.<n>.
void apply_config_file(SuiteConfig& c, const std::string& filename);

/// Path grammar: "base <cpx> ; line <cpx> ; arc <center> <radius> <deg0> <deg1> ; ..."
transport::PathSpec parse_path_literal(const std::string& literal,
                                       const std::complex<double>& t);

/// Validates invariants (t not in {0,1}, samples >= 1, tolerances > 0, ...).
void validate(const SuiteConfig& c);

}  // namespace s1web::cfg
