#include "s1web/complex_io.hpp"

#include <sstream>

#include "s1web/gaussian_rational.hpp"

namespace s1web {

std::optional<std::complex<double>> parse_complex(const std::string& s) {
  auto g = exact::GaussianRational::parse(s);
  if (!g) return std::nullopt;
  return g->to_complex();
}

std::string format_complex(std::complex<double> v) {
  std::ostringstream os;
  os.precision(17);
  os << v.real();
  if (v.imag() >= 0 || std::isnan(v.imag())) os << "+";
  os << v.imag() << "i";
  return os.str();
}

}  // namespace s1web
