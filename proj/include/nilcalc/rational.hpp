#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nilcalc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always stored in lowest terms with positive
/// denominator.  Backed by boost::multiprecision::cpp_rational.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

/// Parses "p", "-p" or "p/q".  Throws std::invalid_argument on junk.
Rational parse_rational(const std::string& text);

/// Canonical "p" or "p/q" form.
std::string rational_to_string(const Rational& value);

inline double to_double(const Rational& value) {
    return static_cast<double>(value);
}

inline bool is_zero(const Rational& value) { return value.is_zero(); }

/// Integer power, exponent >= 0.
Rational rational_pow(const Rational& base, unsigned exponent);

/// Exact factorial as a rational (used for dual-basis cross-checks).
Rational factorial(unsigned n);

}  // namespace nilcalc
