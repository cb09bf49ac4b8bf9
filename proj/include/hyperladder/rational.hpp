#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperladder {

/// Exact rational number with arbitrary-precision numerator and denominator.
/// Always stored in lowest terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// Accepts "p" or "p/q" with optional sign; anything else (including
/// decimal notation) is rejected so labels never pass through floating point.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw ParseError("not an exact rational: '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view s, bool allow_sign) -> BigInt {
    if (s.empty()) fail();
    std::size_t i = 0;
    bool neg = false;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) fail();
    BigInt v = 0;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail();
      v = v * 10 + (s[i] - '0');
    }
    return neg ? BigInt(-v) : v;
  };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, true));
  BigInt num = parse_int(text.substr(0, slash), true);
  BigInt den = parse_int(text.substr(slash + 1), false);
  if (den == 0) fail();
  return Rational(num, den);
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& x) {
  const BigInt& den = boost::multiprecision::denominator(x);
  if (den == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

inline BigInt floor_int(const Rational& x) {
  const BigInt& n = boost::multiprecision::numerator(x);
  const BigInt& d = boost::multiprecision::denominator(x);
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

inline BigInt ceil_int(const Rational& x) { return -floor_int(-x); }

inline bool is_integer(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

}  // namespace hyperladder
