#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "c60/matrix.hpp"

namespace c60 {

// Counts the inner fraction-free update steps performed by elimination,
// i.e. one per entry rewritten below a pivot.
struct BareissStats {
  std::uint64_t pivot_updates = 0;
  std::uint64_t eliminations = 0;
};

namespace detail {

struct ForwardResult {
  bool singular = false;
  std::size_t failed_column = 0;
  bool odd_swaps = false;
};

// In-place fraction-free elimination on the first n columns of w. Entries of
// every column of w (including augmented ones) are updated. Pivot choice is
// the first nonzero entry at or below the diagonal.
inline ForwardResult bareiss_forward(IntMatrix& w, std::size_t n, BareissStats* stats) {
  ForwardResult res;
  BigInt prev = 1;
  BigInt t;
  const std::size_t cols = w.cols();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(w(p, k)) == 0) ++p;
    if (p == n) {
      res.singular = true;
      res.failed_column = k;
      return res;
    }
    if (p != k) {
      w.swap_rows(p, k);
      res.odd_swaps = !res.odd_swaps;
    }
    mpz_srcptr pivot = w(k, k).get_mpz_t();
    for (std::size_t i = k + 1; i < n; ++i) {
      mpz_srcptr lead = w(i, k).get_mpz_t();
      for (std::size_t j = k + 1; j < cols; ++j) {
        mpz_mul(t.get_mpz_t(), w(i, j).get_mpz_t(), pivot);
        mpz_submul(t.get_mpz_t(), lead, w(k, j).get_mpz_t());
        mpz_divexact(w(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      w(i, k) = 0;
      if (stats) stats->pivot_updates += cols - k - 1;
    }
    prev = w(k, k);
  }
  if (stats) ++stats->eliminations;
  return res;
}

// Multiplies each row of [m | rhs] by the lcm of its denominators.
inline IntMatrix integer_rows(const RationalMatrix& m, const RationalMatrix* rhs, BigInt* scale_product) {
  const std::size_t extra = rhs ? rhs->cols() : 0;
  IntMatrix w(m.rows(), m.cols() + extra);
  if (scale_product) *scale_product = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt s = 1;
    for (const auto& x : m.row(i)) s = lcm(s, x.get_den());
    if (rhs)
      for (const auto& x : rhs->row(i)) s = lcm(s, x.get_den());
    for (std::size_t j = 0; j < m.cols(); ++j) w(i, j) = m(i, j).get_num() * (s / m(i, j).get_den());
    for (std::size_t j = 0; j < extra; ++j) w(i, m.cols() + j) = (*rhs)(i, j).get_num() * (s / (*rhs)(i, j).get_den());
    if (scale_product) *scale_product *= s;
  }
  return w;
}

}  // namespace detail

inline BigInt determinant(IntMatrix m, BareissStats* stats = nullptr) {
  if (!m.is_square()) throw Error(Errc::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  auto res = detail::bareiss_forward(m, n, stats);
  if (res.singular) return 0;
  BigInt d = m(n - 1, n - 1);
  return res.odd_swaps ? BigInt(-d) : d;
}

inline BigRational determinant(const RationalMatrix& m, BareissStats* stats = nullptr) {
  if (!m.is_square()) throw Error(Errc::InvalidArgument, "determinant of non-square matrix");
  BigInt scale;
  IntMatrix w = detail::integer_rows(m, nullptr, &scale);
  return make_rational(determinant(std::move(w), stats), scale);
}

// Exact X with m * X = rhs. Forward elimination is fraction-free on the
// row-scaled integer system; back substitution works on d * X, which is
// integral with d the last Bareiss pivot.
inline RationalMatrix bareiss_solve(const RationalMatrix& m, const RationalMatrix& rhs,
                                    BareissStats* stats = nullptr) {
  if (!m.is_square()) throw Error(Errc::InvalidArgument, "solve with non-square matrix");
  if (rhs.rows() != m.rows()) throw Error(Errc::InvalidArgument, "rhs row count mismatch");
  const std::size_t n = m.rows();
  const std::size_t k = rhs.cols();
  IntMatrix w = detail::integer_rows(m, &rhs, nullptr);
  auto res = detail::bareiss_forward(w, n, stats);
  if (res.singular) {
    throw Error(Errc::Singular, "no nonzero pivot in column " + std::to_string(res.failed_column));
  }
  RationalMatrix out(n, k);
  if (n == 0) return out;
  const BigInt d = w(n - 1, n - 1);
  std::vector<BigInt> z(n);
  BigInt t;
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      mpz_mul(t.get_mpz_t(), d.get_mpz_t(), w(ii, n + c).get_mpz_t());
      for (std::size_t j = ii + 1; j < n; ++j) mpz_submul(t.get_mpz_t(), w(ii, j).get_mpz_t(), z[j].get_mpz_t());
      mpz_divexact(z[ii].get_mpz_t(), t.get_mpz_t(), w(ii, ii).get_mpz_t());
    }
    for (std::size_t i = 0; i < n; ++i) out(i, c) = make_rational(z[i], d);
  }
  return out;
}

inline RationalMatrix inverse(const RationalMatrix& m, BareissStats* stats = nullptr) {
  return bareiss_solve(m, RationalMatrix::identity(m.rows()), stats);
}

// Basis of the right null space {x : m x = 0}, from the reduced row echelon
// form. Each basis vector has a 1 in its free coordinate.
inline std::vector<std::vector<BigRational>> nullspace(RationalMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(p, r);
    const BigRational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const BigRational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<BigRational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<BigRational> v(cols, BigRational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace c60
