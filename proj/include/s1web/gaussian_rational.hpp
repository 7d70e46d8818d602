#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>

namespace s1web::exact {

/// Element of Q(i): re + im*i with arbitrary-precision rational parts.
/// mpq_class keeps each part in lowest terms with positive denominator,
/// so equal values always have equal representations.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long n) : re_(n), im_(0) {}           // NOLINT(google-explicit-constructor)
  GaussianRational(long num, long den) : re_(num, den), im_(0) { re_.canonicalize(); }
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, mpq_class(-im_)}; }
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {mpq_class(-re_), mpq_class(-im_)}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// "3/2-1/4i" style; real part omitted when zero and imaginary present.
  std::string to_string() const;

  /// Accepts integer, finite-decimal, and p/q literals in either part,
  /// e.g. "2", "-1.5+0.25i", "1/2+3/4i", "2i", "-i".
  static std::optional<GaussianRational> parse(const std::string& s);

 private:
  mpq_class re_, im_;
};

}  // namespace s1web::exact
