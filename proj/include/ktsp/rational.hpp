#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ktsp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A weight multiplied by the host graph's common denominator. Every shortest
// path, tour and tree length is an exact integer in this unit.
using Length = std::int64_t;

BigInt binomial(std::int64_t n, std::int64_t k);

// Saturates at UINT64_MAX. Meant for budget checks, not for exact values.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

BigInt to_bigint(__int128 value);

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  return Rational(num, den);
}

bool is_integral(const Rational& q);

// "p" for integers, "p/q" in lowest terms otherwise.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// Inverse of to_string. Accepts an optional sign, "p" or "p/q".
Rational parse_rational(std::string_view text);

// Accepts "12", "2.5", "0.125" and "p/q". A leading '-' is accepted and yields
// a negative value so callers can report negativity with their own message.
// Throws ParseError with the offset inside `text`.
Rational parse_decimal(std::string_view text);

// Decimal rendering with the given number of significant digits, rounded
// half-to-even from the exact value. Display only.
std::string to_decimal(const Rational& q, int significant_digits = 12);

}  // namespace ktsp
