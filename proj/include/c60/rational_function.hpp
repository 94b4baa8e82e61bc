#pragma once

#include <string>
#include <utility>

#include "c60/polynomial.hpp"

namespace c60 {

// Quotient num/den of integer polynomials, kept in lowest terms: no common
// polynomial factor, no common integer content across num and den together,
// and a positive leading coefficient in den. Two equal functions therefore
// have identical coefficient sequences.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(IntPolynomial::constant(1)) {}
  RationalFunction(const IntPolynomial& num, const IntPolynomial& den) { assign(to_rational(num), to_rational(den)); }
  RationalFunction(const RationalPolynomial& num, const RationalPolynomial& den) { assign(num, den); }

  static RationalFunction constant(const BigRational& v) {
    return RationalFunction(RationalPolynomial::constant(v), RationalPolynomial::constant(BigRational(1)));
  }

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }

  bool has_pole_at(const BigRational& at) const { return sgn(den_.eval(at)) == 0; }

  BigRational eval(const BigRational& at) const {
    const BigRational d = den_.eval(at);
    if (sgn(d) == 0) throw Error(Errc::PoleAtPoint, "pole at " + c60::to_string(at));
    return num_.eval(at) / d;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(char var = 'a') const {
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
  }

 private:
  void assign(RationalPolynomial num, RationalPolynomial den) {
    if (den.is_zero()) throw Error(Errc::ZeroDenominator, "rational function with zero denominator");
    if (num.is_zero()) {
      num_ = IntPolynomial{};
      den_ = IntPolynomial::constant(1);
      return;
    }
    auto g = gcd(num, den);
    if (g.degree() > 0) {
      num = divmod(num, g).first;
      den = divmod(den, g).first;
    }
    BigInt l = 1;
    for (const auto& x : num.coefficients()) l = lcm(l, x.get_den());
    for (const auto& x : den.coefficients()) l = lcm(l, x.get_den());
    std::vector<BigInt> n, d;
    for (const auto& x : num.coefficients()) n.push_back(x.get_num() * (l / x.get_den()));
    for (const auto& x : den.coefficients()) d.push_back(x.get_num() * (l / x.get_den()));
    BigInt c = 0;
    for (const auto& x : n) c = c60::gcd(c, x);
    for (const auto& x : d) c = c60::gcd(c, x);
    if (d.back() < 0) c = -c;
    for (auto& x : n) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    for (auto& x : d) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    num_ = IntPolynomial(std::move(n));
    den_ = IntPolynomial(std::move(d));
  }

  IntPolynomial num_;
  IntPolynomial den_;
};

}  // namespace c60
