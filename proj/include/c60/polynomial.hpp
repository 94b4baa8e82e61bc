#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "c60/error.hpp"
#include "c60/rational.hpp"

namespace c60 {

// Dense univariate polynomial, coefficients in ascending degree. The zero
// polynomial has no coefficients and degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial x() { return Polynomial(std::vector<T>{T(0), T(1)}); }
  static Polynomial monomial(const T& c, std::size_t k) {
    std::vector<T> v(k + 1, T(0));
    v[k] = c;
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coefficients() const { return c_; }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  const T& leading() const {
    if (c_.empty()) throw Error(Errc::InvalidArgument, "leading coefficient of zero polynomial");
    return c_.back();
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
    return Polynomial(std::move(d));
  }

  // p(-x)
  Polynomial negated_argument() const {
    Polynomial out = *this;
    for (std::size_t k = 1; k < out.c_.size(); k += 2) out.c_[k] = -out.c_[k];
    return out;
  }

  BigRational eval(const BigRational& at) const {
    BigRational acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) {
      acc *= at;
      acc += c_[k];
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  // Descending-degree display, e.g. "x^4 - 9x^3 + 25x^2 - 22x + 4".
  std::string to_string(char var = 'x') const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k] == 0) continue;
      const bool negative = c_[k] < 0;
      T mag = c_[k];
      if (negative) mag = -mag;
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      if (k == 0 || mag != 1) os << mag;
      if (k >= 1) os << var;
      if (k >= 2) os << "^" << k;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RationalPolynomial = Polynomial<BigRational>;

template <class T>
Polynomial<T> pow(const Polynomial<T>& p, unsigned exponent) {
  Polynomial<T> out = Polynomial<T>::constant(T(1));
  Polynomial<T> base = p;
  while (exponent) {
    if (exponent & 1u) out *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return out;
}

inline RationalPolynomial to_rational(const IntPolynomial& p) {
  std::vector<BigRational> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return RationalPolynomial(std::move(c));
}

inline BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& x : p.coefficients()) g = gcd(g, x);
  return g;
}

// Divides out the content. Sign is preserved.
inline IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  const BigInt g = content(p);
  std::vector<BigInt> c = p.coefficients();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

// Smallest positive multiple with integer coefficients, then made primitive.
inline IntPolynomial clear_denominators(const RationalPolynomial& p) {
  BigInt l = 1;
  for (const auto& x : p.coefficients()) l = lcm(l, x.get_den());
  std::vector<BigInt> c;
  for (const auto& x : p.coefficients()) c.push_back(x.get_num() * (l / x.get_den()));
  return primitive_part(IntPolynomial(std::move(c)));
}

// Exact integer form of a rational polynomial whose coefficients are integral.
inline IntPolynomial to_integer(const RationalPolynomial& p) {
  std::vector<BigInt> c;
  for (const auto& x : p.coefficients()) {
    if (!is_integer(x)) throw Error(Errc::InvalidArgument, "polynomial has non-integer coefficient");
    c.push_back(x.get_num());
  }
  return IntPolynomial(std::move(c));
}

inline std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                                const RationalPolynomial& b) {
  if (b.is_zero()) throw Error(Errc::InvalidArgument, "polynomial division by zero");
  std::vector<BigRational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RationalPolynomial{}, a};
  std::vector<BigRational> quo(static_cast<std::size_t>(a.degree() - db + 1), BigRational(0));
  const BigRational lead_inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const BigRational f = rem[static_cast<std::size_t>(k)] * lead_inv;
    if (sgn(f) == 0) continue;
    quo[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * b.coefficients()[static_cast<std::size_t>(j)];
  }
  return {RationalPolynomial(std::move(quo)), RationalPolynomial(std::move(rem))};
}

// Monic gcd over the rationals (zero if both are zero).
inline RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const BigRational inv = 1 / a.leading();
  return a * inv;
}

// Exact quotient a / b over the integers; fails if b does not divide a.
inline IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero()) throw Error(Errc::InvalidArgument, "polynomial does not divide exactly");
  return to_integer(q);
}

// p / gcd(p, p'), primitive with the sign of p's leading coefficient.
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p;
  auto g = gcd(to_rational(p), to_rational(p.derivative()));
  auto q = divmod(to_rational(p), g).first;
  IntPolynomial out = clear_denominators(q);
  if ((out.leading() < 0) != (p.leading() < 0)) out = -out;
  return out;
}

}  // namespace c60
