#include <gtest/gtest.h>

#include "c60/c60.hpp"
#include "test_support.hpp"

namespace c60 {
namespace {

std::vector<RationalSample> sample(const RationalFunction& f, std::size_t count, long first = 1) {
  std::vector<RationalSample> out;
  for (std::size_t k = 0; k < count; ++k) {
    const BigRational at(first + static_cast<long>(k));
    out.push_back({at, f.eval(at)});
  }
  return out;
}

TEST(FitRationalFunction, Reciprocal) {
  const RationalFunction target(IntPolynomial{1}, IntPolynomial{0, 1});
  EXPECT_EQ(fit_rational_function(sample(target, 4), 0, 1), target);
}

TEST(FitRationalFunction, Mobius) {
  const RationalFunction target(IntPolynomial{1, 1}, IntPolynomial{2, 1});
  EXPECT_EQ(fit_rational_function(sample(target, 5), 1, 1), target);
}

TEST(FitRationalFunction, OverspecifiedDegreesReduceToSameFunction) {
  const RationalFunction target(IntPolynomial{1, 1}, IntPolynomial{2, 1});
  EXPECT_EQ(fit_rational_function(sample(target, 9), 3, 3), target);
  EXPECT_EQ(fit_rational_function_auto(sample(target, 9)), target);
}

TEST(FitRationalFunction, DegreeInsufficient) {
  const RationalFunction target(IntPolynomial{1}, IntPolynomial{1, 0, 1});
  try {
    fit_rational_function(sample(target, 6), 0, 1);
    FAIL() << "expected DegreeInsufficient";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegreeInsufficient);
  }
}

TEST(FitRationalFunction, HeldOutMismatchFailsVerification) {
  const RationalFunction target(IntPolynomial{1}, IntPolynomial{0, 1});
  auto samples = sample(target, 5);
  samples.back().value += 1;
  try {
    fit_rational_function(samples, 0, 1);
    FAIL() << "expected VerificationFailed";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::VerificationFailed);
  }
}

TEST(FitRationalFunction, RejectsBadInput) {
  const RationalFunction target(IntPolynomial{1}, IntPolynomial{0, 1});
  EXPECT_THROW(fit_rational_function(sample(target, 3), 0, 1), Error);
  auto dup = sample(target, 5);
  dup[1] = dup[0];
  EXPECT_THROW(fit_rational_function(dup, 0, 1), Error);
}

TEST(FitRationalFunction, RefitOfOwnSamplesIsIdentical) {
  const RationalFunction target(IntPolynomial{3, -1, 2}, IntPolynomial{5, 0, 0, 4});
  const auto first = fit_rational_function(sample(target, 10, 2), 2, 3);
  const auto second = fit_rational_function(sample(first, 10, 2), 2, 3);
  EXPECT_EQ(first.num().coefficients(), second.num().coefficients());
  EXPECT_EQ(first.den().coefficients(), second.den().coefficients());
}

TEST(FitRationalFunction, BuckyballDiagonalGivesReferenceCoefficients) {
  const auto a = laplacian(buckyball());
  const auto samples = sample_green_diagonal(a, positive_integer_points(33));
  const auto fitted = fit_rational_function(samples, 14, 15);
  EXPECT_EQ(fitted, buckyball_c_of_a_literal());
  EXPECT_EQ(fitted.num(), buckyball_c_of_a_numerator());
  EXPECT_EQ(samples.front().value, testing::reference_c_at_1());
}

}  // namespace
}  // namespace c60
