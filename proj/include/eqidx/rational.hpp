#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "eqidx/error.hpp"

namespace eqidx {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  return Rational(num, den);
}

inline std::int64_t numerator_i64(const Rational& r) {
  return boost::multiprecision::numerator(r).convert_to<std::int64_t>();
}
inline std::int64_t denominator_i64(const Rational& r) {
  return boost::multiprecision::denominator(r).convert_to<std::int64_t>();
}

/// Representative of r modulo 1 in [0, 1).
inline Rational mod_one(const Rational& r) {
  const BigInt& num = boost::multiprecision::numerator(r);
  const BigInt& den = boost::multiprecision::denominator(r);
  BigInt rem = num % den;
  if (rem < 0) rem += den;
  return Rational(rem, den);
}

/// Converts r to an integer, throwing IntegralityError with `what` as context
/// if r is not integral.
inline std::int64_t to_integer(const Rational& r, const std::string& what) {
  if (boost::multiprecision::denominator(r) != 1)
    throw IntegralityError(what + ": non-integral value " + r.str());
  return numerator_i64(r);
}

/// Exact quotient num/den; throws IntegralityError if den does not divide num.
inline std::int64_t exact_div(std::int64_t num, std::int64_t den, const std::string& what) {
  if (den == 0 || num % den != 0)
    throw IntegralityError(what + ": " + std::to_string(num) + "/" + std::to_string(den) +
                           " is not an integer");
  return num / den;
}

}  // namespace eqidx
