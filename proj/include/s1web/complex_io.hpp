#pragma once

#include <complex>
#include <optional>
#include <string>

namespace s1web {

/// Parses "a+bi" with integer, decimal, or p/q parts ("2", "1.5-2i", "1/2+3/4i").
std::optional<std::complex<double>> parse_complex(const std::string& s);

/// Prints in "a+bi" form with enough digits to round-trip.
std::string format_complex(std::complex<double> v);

}  // namespace s1web
