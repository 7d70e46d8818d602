#pragma once

#include <string>
#include <vector>

#include "s1web/config.hpp"

namespace s1web::plots {

/// Writes <what>.csv and <what>.svg into config.plot_dir for
/// what in {leaves, web, discriminant, orbits}. Deterministic output;
/// CSV columns are documented in a leading comment line.
std::vector<std::string> emit_plot(const std::string& what, const cfg::SuiteConfig& config);

}  // namespace s1web::plots
