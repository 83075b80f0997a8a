#pragma once

#include <gmpxx.h>

#include <string>

namespace cycle_span {

// Arbitrary-precision integers and rationals. gmpxx keeps arithmetic results
// in lowest terms with a positive denominator; values built from a raw
// numerator/denominator pair must go through ratio().
using BigInt = mpz_class;
using Rational = mpq_class;

// num/den in lowest terms. Throws std::invalid_argument when den == 0.
Rational ratio(const BigInt& num, const BigInt& den);

// Nearest double to q, ties to even. Exact for every q whose value is a
// double; underflows to subnormals/zero and overflows to infinity.
double to_double(const Rational& q);

// Decimal rendering of a double. digits > 0 prints that many significant
// digits (printf %g style); digits == 0 prints the shortest string that
// round-trips.
std::string format_double(double value, int digits);

std::string to_string(const BigInt& value);

}  // namespace cycle_span
