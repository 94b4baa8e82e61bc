#include <gtest/gtest.h>

#include <random>

#include "c60/c60.hpp"
#include "test_support.hpp"

namespace c60 {
namespace {

RationalMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  RationalMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

TEST(BigRational, CanonicalStringForm) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(BigRational(0)), "0/1");
  EXPECT_EQ(to_string(BigRational(7)), "7/1");
  EXPECT_EQ(parse_rational("239741/376200"), make_rational(239741, 376200));
  EXPECT_EQ(parse_rational("-12"), BigRational(-12));
  EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
}

TEST(BigRational, ParseRejectsMalformedInput) {
  for (const char* bad : {"", "1/", "/2", "1.5", "a/b", "1/0", "1 /2", "--1"}) {
    EXPECT_THROW(parse_rational(bad), Error) << bad;
  }
}

TEST(BigRational, TruncatedDecimal) {
  EXPECT_EQ(to_decimal(make_rational(239741, 376200), 5), "0.63727");
  EXPECT_EQ(to_decimal(make_rational(-1, 8), 3), "-0.125");
  EXPECT_EQ(to_decimal(BigRational(3), 2), "3.00");
}

TEST(BareissSolve, IdentityReturnsRhs) {
  std::mt19937_64 rng(7);
  const auto rhs = testing::random_small_matrix(rng, 4, -9, 9, 5);
  EXPECT_EQ(bareiss_solve(RationalMatrix::identity(4), rhs), rhs);
}

TEST(BareissSolve, TwoByTwoAdjugate) {
  const auto inv = bareiss_solve(from_rows({{2, 1}, {1, 1}}), RationalMatrix::identity(2));
  EXPECT_EQ(inv, from_rows({{1, -1}, {-1, 2}}));
}

TEST(BareissSolve, NeedsRowSwap) {
  const auto m = from_rows({{0, 1, 2}, {1, 0, 3}, {4, -3, 8}});
  const auto inv = inverse(m);
  EXPECT_EQ(m * inv, RationalMatrix::identity(3));
}

TEST(BareissSolve, SingularMatrixThrows) {
  const auto m = from_rows({{1, 2}, {2, 4}});
  try {
    bareiss_solve(m, RationalMatrix::identity(2));
    FAIL() << "expected Singular";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Singular);
  }
}

TEST(BareissSolve, RandomRationalInverseProperty) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const auto m = testing::random_small_matrix(rng, n, -6, 6, 4);
    if (sgn(testing::leibniz_determinant(m)) == 0) {
      EXPECT_THROW(inverse(m), Error);
      continue;
    }
    const auto inv = inverse(m);
    EXPECT_EQ(m * inv, RationalMatrix::identity(n));
    EXPECT_EQ(inv * m, RationalMatrix::identity(n));
    ++checked;
  }
  EXPECT_GT(checked, 30);
}

TEST(Determinant, MatchesPermutationExpansion) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = testing::random_small_matrix(rng, 1 + trial % 6, -5, 5, 3);
    EXPECT_EQ(determinant(m), testing::leibniz_determinant(m));
  }
}

TEST(Determinant, IdentityAndLaplacian) {
  EXPECT_EQ(determinant(RationalMatrix::identity(3)), BigRational(1));
  EXPECT_EQ(determinant(laplacian(buckyball())), BigRational(0));
}

TEST(Determinant, ShiftedLaplacianMatchesReferenceFactorization) {
  const auto a = laplacian(buckyball());
  const IntPolynomial reference = factorization_product(buckyball_factorization());
  // det(A + I) = det(-(-I - A)) = (-1)^60 P(-1)
  EXPECT_EQ(determinant(shifted(a, BigRational(1))), reference.eval(BigRational(-1)));
  EXPECT_EQ(reference.eval(BigRational(-1)), BigRational(BigInt("1353132344599438850155267916562432")));
}

TEST(BareissSolve, ShiftedLaplacianDeltaColumnGivesCofOne) {
  const auto a = laplacian(buckyball());
  const auto x = bareiss_solve(shifted(a, BigRational(1)), RationalMatrix::unit_column(60, 0));
  EXPECT_EQ(x(0, 0), testing::reference_c_at_1());
  EXPECT_EQ(to_string(x(0, 0)), "4689335/14519952");
}

TEST(BareissStats, CountsUpdates) {
  BareissStats stats;
  inverse(from_rows({{2, 1}, {1, 1}}), &stats);
  // One elimination step rewrites one row across 1 + 2 remaining columns.
  EXPECT_EQ(stats.pivot_updates, 3u);
  EXPECT_EQ(stats.eliminations, 1u);
}

TEST(Nullspace, RankDeficientSystem) {
  const auto m = from_rows({{1, 2, 3}, {2, 4, 6}});
  const auto basis = nullspace(m);
  ASSERT_EQ(basis.size(), 2u);
  for (const auto& v : basis) {
    const auto col = RationalMatrix::column_vector(v);
    EXPECT_EQ(m * col, RationalMatrix(2, 1));
  }
  EXPECT_TRUE(nullspace(RationalMatrix::identity(3)).empty());
}

TEST(Matrix, PermutedAndBlocks) {
  const auto m = from_rows({{1, 2}, {3, 4}});
  const std::vector<std::size_t> order{1, 0};
  EXPECT_EQ(m.permuted(order), from_rows({{4, 3}, {2, 1}}));
  EXPECT_EQ(m.block(1, 0, 1, 2), from_rows({{3, 4}}));
  EXPECT_FALSE(m.is_symmetric());
  EXPECT_TRUE(from_rows({{1, 5}, {5, 2}}).is_symmetric());
  EXPECT_EQ(m.trace(), BigRational(5));
  EXPECT_THROW(m * from_rows({{1, 2, 3}}), Error);
}

}  // namespace
}  // namespace c60
