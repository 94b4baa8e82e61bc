#pragma once

// Independent oracles used by the unit tests. Nothing here calls into the
// elimination or interpolation code it is compared against.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "c60/c60.hpp"

namespace c60::testing {

// det by permutation expansion over a commutative ring.
template <class T>
T leibniz_determinant(const std::vector<std::vector<T>>& m, const T& zero, const T& one) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total = zero;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term = one;
    for (std::size_t i = 0; i < n; ++i) term = term * m[i][perm[i]];
    if (inversions % 2)
      total = total - term;
    else
      total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline BigRational leibniz_determinant(const RationalMatrix& m) {
  std::vector<std::vector<BigRational>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i].assign(m.row(i).begin(), m.row(i).end());
  return leibniz_determinant(rows, BigRational(0), BigRational(1));
}

// det(x I - m) by permutation expansion with polynomial entries.
inline RationalPolynomial leibniz_charpoly(const RationalMatrix& m) {
  std::vector<std::vector<RationalPolynomial>> rows(m.rows(), std::vector<RationalPolynomial>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      RationalPolynomial e = RationalPolynomial::constant(-m(i, j));
      if (i == j) e += RationalPolynomial::x();
      rows[i][j] = e;
    }
  return leibniz_determinant(rows, RationalPolynomial{}, RationalPolynomial::constant(BigRational(1)));
}

inline RationalMatrix random_small_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi, long max_den = 1) {
  std::uniform_int_distribution<long> num(lo, hi);
  std::uniform_int_distribution<long> den(1, max_den);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = make_rational(num(rng), den(rng));
  return m;
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Frozen from the reference closed form N(a)/D(a), evaluated independently.
inline BigRational reference_c_at_1() { return make_rational(28136010, 87119712); }
inline BigRational reference_c_at_2() { return parse_rational("400497647/1736377552"); }

}  // namespace c60::testing
