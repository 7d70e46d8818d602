#include "s1web/gaussian_rational.hpp"

#include <cctype>
#include <stdexcept>

namespace s1web::exact {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  mpq_class n2 = o.norm2();
  if (n2 == 0) throw std::domain_error("GaussianRational: division by zero");
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / n2;
  mpq_class i = (im_ * o.re_ - re_ * o.im_) / n2;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string GaussianRational::to_string() const {
  auto q_str = [](const mpq_class& q) { return q.get_str(); };
  if (im_ == 0) return q_str(re_);
  std::string imag;
  if (im_ == 1)
    imag = "i";
  else if (im_ == -1)
    imag = "-i";
  else
    imag = q_str(im_) + "i";
  if (re_ == 0) return imag;
  if (im_ > 0) return q_str(re_) + "+" + imag;
  return q_str(re_) + imag;
}

namespace {

// Parses one signed number: integer, p/q, or finite decimal. Advances pos.
std::optional<mpq_class> parse_rational(const std::string& s, size_t& pos) {
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  size_t digits_begin = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digits_begin) {
    pos = start;
    return std::nullopt;
  }
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t den_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == den_begin) {
      pos = start;
      return std::nullopt;
    }
    mpq_class q(s.substr(start, pos - start));
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return q;
  }
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    size_t frac_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    size_t nfrac = pos - frac_begin;
    std::string digits = s.substr(start, digits_begin - start) +  // sign
                         s.substr(digits_begin, frac_begin - 1 - digits_begin) +
                         s.substr(frac_begin, nfrac);
    mpz_class num(digits);
    mpz_class den(1);
    for (size_t k = 0; k < nfrac; ++k) den *= 10;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  mpq_class q(s.substr(start, pos - start));
  return q;
}

}  // namespace

std::optional<GaussianRational> GaussianRational::parse(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) return std::nullopt;

  size_t pos = 0;
  mpq_class re(0), im(0);

  auto parse_part = [&](bool& is_imag) -> std::optional<mpq_class> {
    // A bare "i", "+i" or "-i" is the unit imaginary.
    size_t start = pos;
    int sign = 1;
    size_t p = pos;
    if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
      if (s[p] == '-') sign = -1;
      ++p;
    }
    if (p < s.size() && s[p] == 'i' && (p + 1 == s.size() || s[p + 1] == '+' || s[p + 1] == '-')) {
      pos = p + 1;
      is_imag = true;
      return mpq_class(sign);
    }
    auto q = parse_rational(s, pos);
    if (!q) {
      pos = start;
      return std::nullopt;
    }
    is_imag = false;
    if (pos < s.size() && s[pos] == 'i') {
      ++pos;
      is_imag = true;
    }
    return q;
  };

  bool saw_real = false, saw_imag = false;
  while (pos < s.size()) {
    bool is_imag = false;
    auto q = parse_part(is_imag);
    if (!q) return std::nullopt;
    if (is_imag) {
      if (saw_imag) return std::nullopt;
      saw_imag = true;
      im = *q;
    } else {
      if (saw_real) return std::nullopt;
      saw_real = true;
      re = *q;
    }
  }
  if (!saw_real && !saw_imag) return std::nullopt;
  return GaussianRational(re, im);
}

}  // namespace s1web::exact
