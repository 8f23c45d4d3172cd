#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "bm/errors.hpp"

namespace bm {

/// Exact arbitrary-precision rational: always kept in lowest terms with a
/// positive denominator (GMP canonical form). Every quantity in the toolkit
/// outside the float search lives in this field.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Parses "p/q" or "p" (optionally negative). Throws ParseError on malformed
/// input or a zero denominator. The result is canonicalized.
Rational rat_from_string(const std::string& text);

/// Canonical encoding "p/q" with q > 0 and explicit denominator ("2/1",
/// "-1/3", "0/1"). This is the only form rationals take on the wire.
std::string rat_to_string(const Rational& value);

inline double rat_to_double(const Rational& value) { return value.convert_to<double>(); }

inline int rat_sign(const Rational& value) { return value.sign(); }

inline Rational rat_abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace bm
