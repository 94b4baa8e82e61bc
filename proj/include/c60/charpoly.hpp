#pragma once

#include <cstddef>
#include <vector>

#include "c60/elimination.hpp"
#include "c60/parallel.hpp"
#include "c60/polynomial.hpp"

namespace c60 {

// det(x I - m) with rational coefficients. The determinant is evaluated at
// x = 0, 1, ..., n and the degree-n interpolant is recovered with Newton
// divided differences.
inline RationalPolynomial charpoly_rational(const RationalMatrix& m, unsigned threads = 1) {
  if (!m.is_square()) throw Error(Errc::InvalidArgument, "charpoly of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<BigRational> c = parallel_map(n + 1, threads, [&](std::size_t x) {
    RationalMatrix shifted_m = m * BigRational(-1);
    for (std::size_t i = 0; i < n; ++i) shifted_m(i, i) += static_cast<unsigned long>(x);
    return determinant(shifted_m);
  });

  // Divided differences on the nodes 0..n; node spacing j gives divisor j.
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = n; i >= j; --i) c[i] = (c[i] - c[i - 1]) / static_cast<unsigned long>(j);

  RationalPolynomial p = RationalPolynomial::constant(c[n]);
  for (std::size_t k = n; k-- > 0;) {
    p = p * RationalPolynomial{BigRational(-static_cast<long>(k)), BigRational(1)};
    p += RationalPolynomial::constant(c[k]);
  }
  return p;
}

// Integer characteristic polynomial; m must have integer entries.
inline IntPolynomial charpoly(const RationalMatrix& m, unsigned threads = 1) {
  if (!has_integer_entries(m)) throw Error(Errc::InvalidArgument, "charpoly requires integer entries; use charpoly_rational");
  IntPolynomial p = to_integer(charpoly_rational(m, threads));
  if (p.degree() != static_cast<int>(m.rows()) || p.leading() != 1) {
    throw Error(Errc::VerificationFailed, "interpolated characteristic polynomial is not monic of full degree");
  }
  return p;
}

}  // namespace c60
