#include "cycle_span/rational.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace cycle_span {

Rational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) {
  const int sign = sgn(q);
  if (sign == 0) return 0.0;

  BigInt num = abs(q.get_num());
  BigInt den = q.get_den();

  // Scale so the integer quotient carries 54 or 55 significant bits, which
  // leaves at least one guard bit beyond the 53-bit significand.
  const long approx = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                      static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  const long shift = 54 - approx;
  if (shift >= 0) {
    num <<= static_cast<mp_bitcnt_t>(shift);
  } else {
    den <<= static_cast<mp_bitcnt_t>(-shift);
  }
  BigInt quot;
  BigInt rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

  // value = quot * 2^-shift (+ remainder). Drop `extra` low bits; keep the
  // resulting ulp exponent at or above the subnormal floor 2^-1074.
  long extra = static_cast<long>(mpz_sizeinbase(quot.get_mpz_t(), 2)) - 53;
  if (extra - shift < -1074) extra = shift - 1074;

  BigInt mantissa = quot >> static_cast<mp_bitcnt_t>(extra);
  const bool half = mpz_tstbit(quot.get_mpz_t(), static_cast<mp_bitcnt_t>(extra - 1)) != 0;
  bool sticky = rem != 0;
  if (!sticky && extra > 1) {
    sticky = mpz_scan1(quot.get_mpz_t(), 0) < static_cast<mp_bitcnt_t>(extra - 1);
  }
  if (half && (sticky || mpz_odd_p(mantissa.get_mpz_t()))) ++mantissa;

  const double magnitude = std::ldexp(mantissa.get_d(), static_cast<int>(extra - shift));
  return sign < 0 ? -magnitude : magnitude;
}

std::string format_double(double value, int digits) {
  std::array<char, 64> buf{};
  std::to_chars_result res;
  if (digits > 0) {
    res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                        std::chars_format::general, digits);
  } else {
    res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  }
  return std::string(buf.data(), res.ptr);
}

std::string to_string(const BigInt& value) { return value.get_str(); }

}  // namespace cycle_span
