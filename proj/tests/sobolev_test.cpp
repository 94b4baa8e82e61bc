#include <gtest/gtest.h>

#include <random>

#include "c60/c60.hpp"

namespace c60 {
namespace {

struct Fixture {
  PolyhedralGraph graph = buckyball();
  RationalMatrix a = laplacian(graph);
  RationalMatrix g_star = pseudo_green(a);
  RationalMatrix g_one = green_matrix(a, BigRational(1));
  BigRational c0 = buckyball_c0();
  RationalFunction c = buckyball_c_of_a_literal();
};

const Fixture& fx() {
  static const Fixture f;
  return f;
}

TEST(Energy, SimpleVectors) {
  EXPECT_EQ(energy(StateVector::constant(60, BigRational(7)), fx().a), 0);
  EXPECT_EQ(energy(StateVector::delta(60, 0), fx().a), 3);
}

TEST(Energy, PentagonIndicatorCountsBoundaryEdges) {
  const auto census = face_census(fx().graph);
  for (const auto& f : census.faces) {
    if (f.size() != 5) continue;
    std::vector<BigRational> v(60, BigRational(0));
    for (Vertex x : f) v[x] = 1;
    // each pentagon vertex has one edge leaving the face
    EXPECT_EQ(energy(StateVector(v), fx().a), 5);
    break;
  }
}

TEST(Energy, DampedEnergy) {
  const auto d = StateVector::delta(60, 3);
  EXPECT_EQ(energy_a(d, fx().a, make_rational(1, 2)), make_rational(7, 2));
  EXPECT_EQ(energy_a(StateVector::constant(60, BigRational(1)), fx().a, BigRational(2)), 120);
  EXPECT_THROW(energy_a(d, fx().a, BigRational(0)), Error);
}

TEST(Energy, FormMismatchOnNonZeroRowSums) {
  auto m = fx().a;
  m(0, 0) = 4;
  try {
    energy(StateVector::delta(60, 0), m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FormMismatch);
  }
}

TEST(Energy, NonNegativeAndZeroOnlyOnConstants) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 50; ++t) {
    const auto u = random_vector(rng, 60);
    EXPECT_GE(energy(u, fx().a), 0);
    const auto m = random_mean_zero_vector(rng, 60);
    if (sgn(m.max_abs()) != 0) EXPECT_GT(energy(m, fx().a), 0);
  }
}

TEST(Reproducing, PseudoGreenAndDampedKernels) {
  std::mt19937_64 rng(4);
  const auto u = random_mean_zero_vector(rng, 60);
  EXPECT_TRUE(reproducing_check(u, fx().a, fx().g_star, KernelMode::mean_zero()).ok);
  const auto w = random_vector(rng, 60);
  EXPECT_TRUE(reproducing_check(w, fx().a, fx().g_one, KernelMode::damped(BigRational(1))).ok);
  // wrong kernel for the mode
  const auto r = reproducing_check(w, fx().a, fx().g_star, KernelMode::damped(BigRational(1)));
  EXPECT_FALSE(r.ok);
}

TEST(Reproducing, MeanZeroPrecondition) {
  try {
    reproducing_check(StateVector::delta(60, 0), fx().a, fx().g_star, KernelMode::mean_zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PreconditionViolation);
  }
}

TEST(SobolevTrials, RandomMeanZero) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const auto u = random_mean_zero_vector(rng, 60);
    const auto trial = sobolev_trial(u, fx().a, fx().c0, KernelMode::mean_zero());
    EXPECT_TRUE(trial.holds) << t;
  }
}

TEST(SobolevTrials, RandomDamped) {
  std::mt19937_64 rng(2);
  for (const BigRational& a : {make_rational(1, 10), BigRational(1), BigRational(10)}) {
    const BigRational ca = fx().c.eval(a);
    for (int t = 0; t < 50; ++t) {
      const auto u = random_vector(rng, 60);
      EXPECT_TRUE(sobolev_trial(u, fx().a, ca, KernelMode::damped(a)).holds);
    }
  }
}

TEST(SobolevTrials, ScalingInvariance) {
  std::mt19937_64 rng(6);
  const auto u = random_mean_zero_vector(rng, 60);
  const auto t1 = sobolev_trial(u, fx().a, fx().c0, KernelMode::mean_zero());
  const auto t2 = sobolev_trial(u.scaled(BigRational(2)), fx().a, fx().c0, KernelMode::mean_zero());
  EXPECT_EQ(t2.lhs, 4 * t1.lhs);
  EXPECT_EQ(t2.rhs, 4 * t1.rhs);
}

TEST(Equality, PseudoGreenColumns) {
  for (std::size_t j0 : {0u, 17u, 59u}) {
    const auto w = equality_witness(fx().a, fx().g_star, j0, KernelMode::mean_zero());
    EXPECT_TRUE(w.equality);
    EXPECT_EQ(w.diagonal, fx().c0);
    EXPECT_EQ(w.energy, fx().c0);
    const auto trial = sobolev_trial(StateVector::column(fx().g_star, j0), fx().a, fx().c0, KernelMode::mean_zero());
    EXPECT_EQ(trial.lhs, trial.rhs);
  }
}

TEST(Equality, DampedColumns) {
  const auto w = equality_witness(fx().a, fx().g_one, 17, KernelMode::damped(BigRational(1)));
  EXPECT_TRUE(w.equality);
  EXPECT_EQ(w.diagonal, fx().c.eval(BigRational(1)));
}

TEST(Equality, Sharpness) {
  // any smaller constant fails on the extremal column
  const auto col = StateVector::column(fx().g_star, 0);
  const BigRational smaller = fx().c0 - make_rational(1, 1000000);
  EXPECT_FALSE(sobolev_trial(col, fx().a, smaller, KernelMode::mean_zero()).holds);
  const auto dcol = StateVector::column(fx().g_one, 0);
  const BigRational c1 = fx().c.eval(BigRational(1));
  EXPECT_FALSE(sobolev_trial(dcol, fx().a, c1 - make_rational(1, 1000000), KernelMode::damped(BigRational(1))).holds);
}

TEST(Equality, MaxNotAtDiagonal) {
  auto k = fx().g_star;
  k(5, 0) = k(0, 0) + 1;
  try {
    equality_witness(fx().a, k, 0, KernelMode::mean_zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MaxNotAtDiagonal);
  }
}

TEST(Schwarz, StepHoldsForRandomVectors) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 5; ++t) EXPECT_TRUE(schwarz_step_check(random_mean_zero_vector(rng, 60), fx().a, fx().g_star));
}

TEST(RandomVectors, RangesAndMean) {
  std::mt19937_64 rng(10);
  const auto u = random_vector(rng, 1000);
  for (const auto& x : u.values()) {
    EXPECT_LE(abs_value(x), 100);
    EXPECT_LE(x.get_den(), 10);
  }
  EXPECT_TRUE(random_mean_zero_vector(rng, 60).mean_zero());
  std::mt19937_64 r1(3), r2(3);
  EXPECT_EQ(random_vector(r1, 60).values(), random_vector(r2, 60).values());
}

}  // namespace
}  // namespace c60
