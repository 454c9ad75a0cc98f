#include "ktsp/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "ktsp/errors.hpp"

namespace ktsp {

namespace mp = boost::multiprecision;

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(result);
}

BigInt to_bigint(__int128 value) {
  const bool negative = value < 0;
  unsigned __int128 magnitude =
      negative ? static_cast<unsigned __int128>(-(value + 1)) + 1
               : static_cast<unsigned __int128>(value);
  BigInt result = static_cast<std::uint64_t>(magnitude >> 64);
  result <<= 64;
  result += static_cast<std::uint64_t>(magnitude);
  return negative ? BigInt(-result) : result;
}

bool is_integral(const Rational& q) { return mp::denominator(q) == 1; }

std::string to_string(const BigInt& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (is_integral(q)) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

std::size_t first_non_digit(std::string_view s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return i;
  }
  return s.size();
}

BigInt pow10(unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::string_view body = text.substr(pos);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  if (!all_digits(num)) {
    throw ParseError("invalid rational '" + std::string(text) + "'",
                     pos + first_non_digit(num));
  }
  BigInt p{std::string(num)};
  BigInt q = 1;
  if (slash != std::string_view::npos) {
    const std::string_view den = body.substr(slash + 1);
    if (!all_digits(den)) {
      throw ParseError("invalid rational denominator in '" + std::string(text) + "'",
                       pos + slash + 1 + first_non_digit(den));
    }
    q = BigInt{std::string(den)};
    if (q == 0) {
      throw ParseError("zero denominator in '" + std::string(text) + "'", pos + slash + 1);
    }
  }
  Rational r(p, q);
  return negative ? Rational(-r) : r;
}

Rational parse_decimal(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return parse_rational(text);
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::string_view body = text.substr(pos);
  const auto dot = body.find('.');
  const std::string_view whole = body.substr(0, dot);
  if (!all_digits(whole)) {
    throw ParseError("invalid number '" + std::string(text) + "'",
                     pos + first_non_digit(whole));
  }
  BigInt num{std::string(whole)};
  BigInt den = 1;
  if (dot != std::string_view::npos) {
    const std::string_view frac = body.substr(dot + 1);
    if (!all_digits(frac)) {
      throw ParseError("invalid fractional part in '" + std::string(text) + "'",
                       pos + dot + 1 + first_non_digit(frac));
    }
    den = pow10(static_cast<unsigned>(frac.size()));
    num = num * den + BigInt{std::string(frac)};
  }
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

std::string to_decimal(const Rational& q, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  if (q == 0) return "0";
  const bool negative = q < 0;
  BigInt a = mp::abs(mp::numerator(q));
  const BigInt b = mp::denominator(q);

  // Find e with 10^e <= a/b < 10^(e+1).
  long e = static_cast<long>(a.str().size()) - static_cast<long>(b.str().size());
  auto at_least_pow = [&](long exponent) {
    // a/b >= 10^exponent
    if (exponent >= 0) return a >= b * pow10(static_cast<unsigned>(exponent));
    return a * pow10(static_cast<unsigned>(-exponent)) >= b;
  };
  while (!at_least_pow(e)) --e;
  while (at_least_pow(e + 1)) ++e;

  // digits = round(a/b * 10^(sig-1-e)), half to even.
  const long shift = significant_digits - 1 - e;
  BigInt num = a;
  BigInt den = b;
  if (shift >= 0) {
    num *= pow10(static_cast<unsigned>(shift));
  } else {
    den *= pow10(static_cast<unsigned>(-shift));
  }
  BigInt digits = num / den;
  const BigInt twice_rem = 2 * (num % den);
  if (twice_rem > den || (twice_rem == den && (digits & 1) != 0)) ++digits;
  if (digits == pow10(static_cast<unsigned>(significant_digits))) {
    digits /= 10;
    ++e;
  }
  std::string d = digits.str();
  while (d.size() > 1 && d.back() == '0') d.pop_back();
  std::string out = negative ? "-" : "";
  const long sig = significant_digits;
  // Trailing zeros are dropped; `d` keeps at least the leading digit.
  if (e >= 0 && e < sig) {
    if (d.size() < static_cast<std::size_t>(e + 1)) d.resize(static_cast<std::size_t>(e + 1), '0');
    out += d.substr(0, static_cast<std::size_t>(e + 1));
    if (d.size() > static_cast<std::size_t>(e + 1)) out += "." + d.substr(static_cast<std::size_t>(e + 1));
  } else if (e < 0 && e >= -6) {
    out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + d;
  } else {
    out += d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    out += (e < 0 ? "e-" : "e+") + std::to_string(e < 0 ? -e : e);
  }
  return out;
}

}  // namespace ktsp
