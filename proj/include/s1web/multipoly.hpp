#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>

#include "s1web/gaussian_rational.hpp"

namespace s1web::exact {

/// Variable order for all polynomials in the kernel.
enum class Var : int { x = 0, y = 1, z = 2, t = 3, u = 4 };
inline constexpr int kNumVars = 5;
inline constexpr std::array<char, kNumVars> kVarNames{'x', 'y', 'z', 't', 'u'};

using Monomial = std::array<int, kNumVars>;

/// Sparse multivariate polynomial over Q(i) in the variables (x, y, z, t, u).
/// The term map is the canonical form: no zero coefficients are ever stored,
/// so value equality coincides with representation equality.
class MultiPoly {
 public:
  MultiPoly() = default;

  static MultiPoly constant(GaussianRational c);
  static MultiPoly variable(Var v, int exponent = 1);

  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  const std::map<Monomial, GaussianRational>& terms() const { return terms_; }

  int degree(Var v) const;
  int total_degree() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly scaled(const GaussianRational& c) const;
  MultiPoly pow(unsigned k) const;

  MultiPoly derivative(Var v) const;

  /// Moves every power of `from` onto `to` (used for substitutions like u := x).
  MultiPoly rename_var(Var from, Var to) const;

  /// Substitutes a constant for one variable.
  MultiPoly substitute(Var v, const GaussianRational& value) const;

  /// Rewrites y^2 -> x^3 - (1+t) x^2 + t x until the y-degree is at most 1.
  /// Idempotent, and value-preserving on points of the curve.
  MultiPoly reduce_mod_curve() const;

  GaussianRational eval(const std::array<GaussianRational, kNumVars>& point) const;
  std::complex<double> eval(const std::array<std::complex<double>, kNumVars>& point) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const GaussianRational& c);

  std::map<Monomial, GaussianRational> terms_;
};

/// y^2 as a polynomial in x and t on the curve.
MultiPoly curve_rhs();

// The three special-leaf polynomials.
MultiPoly poly_f0();  // -z^2 + 2z - x
MultiPoly poly_f1();  // -z^2 + x
MultiPoly poly_ft();  // z^2 - 2xz + x

/// The 2-web discriminant quartic in z, coefficients in (u, t).
MultiPoly poly_delta();

// Coefficients of the section quadratic A x0^2 + B x0 + C in (u, z, t).
MultiPoly poly_star_A();
MultiPoly poly_star_B();
MultiPoly poly_star_C();

}  // namespace s1web::exact
