/// @file scalar.hpp
/// @brief Two scalar modes: exact rationals (GMP) and doubles.
#pragma once
#include <gmpxx.h>

#include <cmath>
#include <string>

namespace qes {

using Rational = mpq_class;

inline bool is_zero(const Rational& v) { return sgn(v) == 0; }
inline bool is_zero(double v) { return v == 0.0; }

inline double to_double(const Rational& v) { return v.get_d(); }
inline double to_double(double v) { return v; }

inline double magnitude(const Rational& v) { return std::fabs(v.get_d()); }
inline double magnitude(double v) { return std::fabs(v); }

/// Parses "p/q", an integer, or a decimal such as "0.25" / "-1e-3" into an exact rational.
Rational parse_rational(const std::string& text);

/// Exact value of a double (every finite double is a dyadic rational).
Rational exact(double v);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& v);

/// Shortest round-trip decimal.
std::string to_string(double v);

}  // namespace qes
