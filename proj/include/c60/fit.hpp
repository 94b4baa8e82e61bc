#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "c60/elimination.hpp"
#include "c60/rational_function.hpp"

namespace c60 {

struct RationalSample {
  BigRational at;
  BigRational value;
};

// Rational function with deg num <= num_deg and deg den <= den_deg through
// every sample. The last two samples are held out: the coefficients come
// from the exact null space of value * D(at) - N(at) = 0 over the others,
// and the held-out pair must then match.
inline RationalFunction fit_rational_function(std::span<const RationalSample> samples, int num_deg, int den_deg) {
  if (num_deg < 0 || den_deg < 0) throw Error(Errc::InvalidArgument, "negative degree bound");
  const std::size_t unknowns = static_cast<std::size_t>(num_deg + den_deg + 2);
  if (samples.size() < unknowns + 1) {
    throw Error(Errc::InvalidArgument, "need at least " + std::to_string(unknowns + 1) + " samples, got " +
                                           std::to_string(samples.size()));
  }
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i].at == samples[j].at) throw Error(Errc::InvalidArgument, "duplicate sample point " + to_string(samples[i].at));

  const std::size_t fitting = samples.size() - 2;
  RationalMatrix system(fitting, unknowns);
  for (std::size_t r = 0; r < fitting; ++r) {
    BigRational power(1);
    const auto& s = samples[r];
    for (int k = 0; k <= std::max(num_deg, den_deg); ++k) {
      if (k <= num_deg) system(r, static_cast<std::size_t>(k)) = power;
      if (k <= den_deg) system(r, static_cast<std::size_t>(num_deg + 1 + k)) = -s.value * power;
      power *= s.at;
    }
  }
  auto basis = nullspace(std::move(system));
  if (basis.empty()) {
    throw Error(Errc::DegreeInsufficient, "no rational function of degrees (" + std::to_string(num_deg) + "," +
                                              std::to_string(den_deg) + ") interpolates the samples");
  }
  const auto& v = basis.front();
  RationalPolynomial num(std::vector<BigRational>(v.begin(), v.begin() + num_deg + 1));
  RationalPolynomial den(std::vector<BigRational>(v.begin() + num_deg + 1, v.end()));
  if (den.is_zero()) throw Error(Errc::DegreeInsufficient, "null space vector has zero denominator");
  RationalFunction f(num, den);

  for (const auto& s : samples) {
    if (f.has_pole_at(s.at) || f.eval(s.at) != s.value) {
      throw Error(Errc::VerificationFailed, "fitted function disagrees with sample at " + to_string(s.at));
    }
  }
  return f;
}

// Tries degree bounds (k, k) for k = 0, 1, ... until the fit verifies.
inline RationalFunction fit_rational_function_auto(std::span<const RationalSample> samples) {
  for (int k = 0; static_cast<std::size_t>(2 * k + 3) <= samples.size(); ++k) {
    try {
      return fit_rational_function(samples, k, k);
    } catch (const Error& e) {
      if (e.code() != Errc::DegreeInsufficient && e.code() != Errc::VerificationFailed) throw;
    }
  }
  throw Error(Errc::DegreeInsufficient, "too few samples to discover the degree");
}

}  // namespace c60
