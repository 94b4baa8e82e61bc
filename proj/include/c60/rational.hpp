#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

#include "c60/error.hpp"

namespace c60 {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw Error(Errc::ZeroDenominator, "rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const BigRational& r) { return r.get_den() == 1; }

// Canonical "p/q" form, denominator always present ("3/1", "0/1").
inline std::string to_string(const BigRational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

// Accepts "p/q" or a bare integer "p". Whitespace is not allowed.
inline BigRational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::string s(part);
    std::size_t digits_from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == digits_from) throw Error(Errc::ParseError, "malformed rational '" + std::string(text) + "'");
    for (std::size_t i = digits_from; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw Error(Errc::ParseError, "malformed rational '" + std::string(text) + "'");
      }
    }
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

// Truncated decimal expansion with a fixed number of fractional digits.
inline std::string to_decimal(const BigRational& r, int digits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  BigInt magnitude = abs(r.get_num()) * scale / r.get_den();
  std::string s = magnitude.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  if (sgn(r) < 0) s.insert(0, "-");
  return s;
}

inline double to_double(const BigRational& r) { return r.get_d(); }

inline BigRational abs_value(const BigRational& r) { return sgn(r) < 0 ? BigRational(-r) : r; }

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace c60
