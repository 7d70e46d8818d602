#pragma once

#include "s1web/config.hpp"
#include "s1web/report.hpp"

namespace s1web::suite {

/// Runs the full verification battery for the given configuration and
/// returns the structured report (also written to config.out_path when set).
/// Check set: exact identity catalog, group-law and formula-discrepancy
/// oracles, monodromy orbit structure, Riccati first-integral and
/// singularity checks, the section solver and discriminant-leaf sweeps, the
/// harmonic/cross-ratio sweep, the parallelizability certificate, pullback
/// checks, and the loop-monodromy battery.
report::VerificationReport run_suite(const cfg::SuiteConfig& config);

}  // namespace s1web::suite
