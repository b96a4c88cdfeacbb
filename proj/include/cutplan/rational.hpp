#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cutplan {

using BigInt = boost::multiprecision::cpp_int;

// Always normalized: lowest terms, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// "num/den", e.g. "2/5", "0/1", "7/1". Integers keep the "/1" so the
/// format is uniform for machine consumers.
std::string to_fraction_string(const Rational& value);

/// Accepts "num/den" or a bare integer. Throws std::invalid_argument on
/// anything else, including a zero denominator.
Rational parse_fraction(std::string_view text);

/// Nearest double, rendered with 12 significant digits.
std::string to_decimal_string(const Rational& value);

double to_double(const Rational& value);

inline bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

}  // namespace cutplan
