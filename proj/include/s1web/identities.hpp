#pragma once

#include <optional>
#include <string>
#include <vector>

#include "s1web/multipoly.hpp"

namespace s1web::exact {

enum class IdentityId { I1, I2, I3, I4, I5, I6 };

std::string identity_name(IdentityId id);

struct Witness {
  std::array<GaussianRational, kNumVars> point;
  GaussianRational value;
  std::string to_string() const;
};

struct IdentityResult {
  IdentityId id;
  std::string name;
  std::string description;
  bool zero = false;          // canonical form of the defect polynomial is empty
  size_t defect_terms = 0;    // number of surviving terms when nonzero
  std::optional<Witness> witness;
};

/// The polynomial whose canonical-form vanishing is the identity.
MultiPoly identity_defect(IdentityId id);

/// Exact verdict by canonical form; on failure attaches an integer witness.
IdentityResult identity_check(IdentityId id);

std::vector<IdentityResult> check_all_identities();

/// Searches a small integer grid for a point where p is nonzero.
std::optional<Witness> find_nonzero_witness(const MultiPoly& p, int radius = 4);

/// Samples p on an integer grid with degree(v)+1 points per active variable.
/// For a polynomial, vanishing on such a grid is equivalent to being zero.
bool vanishes_on_degree_grid(const MultiPoly& p);

// Derived web-ODE facts kept next to the catalog: the quadratic for the
// section slopes is m^2 - 2 Z0 m + P with
//   P = z (z-1) [(2tu - u^2 - t) z - u^3 + 2u^2 - tu] / (4 u^2 (u-1)^2 (t-u)).
// The inner cubic is recovered here from the slope product of the roots of
// the section quadratic, and cross-checked against a once-circulated variant
// whose tail reads "- u^3 + u^2 - tu + 2".

/// Inner bracket of the derived constant coefficient, as a polynomial in (u, z, t).
MultiPoly web_ode_constant_inner_derived();

/// The variant inner bracket with tail "+ u^2 - tu + 2"; kept for the
/// discrepancy check, together with a witness of the mismatch.
MultiPoly web_ode_constant_inner_variant();

struct CoefficientComparison {
  bool derived_matches = false;   // derived closed form equals the slope product
  bool variant_matches = false;   // variant closed form equals the slope product
  std::optional<Witness> variant_witness;
};

/// Exact comparison of both closed forms against the slope product of the
/// section quadratic (cross-multiplied, canonical-form test).
CoefficientComparison compare_web_ode_constant();

/// Exact check of the relation (Z0^2 - P) * 16 u^2 (t-u)(u-1)^2 = Delta,
/// which places the slope tangency locus exactly on the discriminant quartic.
bool slope_discriminant_matches_delta();

/// Difference of the two first-integral numerators: x*f0^2 versus the
/// variant x*(z^2 - 2z - x)^2. Nonzero; the witness documents which one is
/// constant on leaves (the f0 form, by identity I5).
struct NumeratorComparison {
  MultiPoly difference;
  std::optional<Witness> witness;
  bool variant_is_first_integral = false;  // dF~ ^ Omega check for the variant
};
NumeratorComparison compare_first_integral_numerators();

}  // namespace s1web::exact
