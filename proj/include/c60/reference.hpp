#pragma once

// Closed-form results for the truncated icosahedron, entered literally so
// that computed values can be compared against them.

#include <string>
#include <vector>

#include "c60/polynomial.hpp"
#include "c60/rational_function.hpp"

namespace c60 {

struct FactorPower {
  IntPolynomial factor;
  unsigned exponent;
  // Radical form of each real root, ascending.
  std::vector<std::string> root_hints;
};

inline std::vector<FactorPower> buckyball_factorization() {
  return {
      {IntPolynomial{0, 1}, 1, {"0"}},
      {IntPolynomial{-2, 1}, 9, {"2"}},
      {IntPolynomial{-5, 1}, 4, {"5"}},
      {IntPolynomial{3, -5, 1}, 5, {"(5 - sqrt(13))/2", "(5 + sqrt(13))/2"}},
      {IntPolynomial{11, -7, 1}, 5, {"(7 - sqrt(5))/2", "(7 + sqrt(5))/2"}},
      {IntPolynomial{8, -7, 1}, 4, {"(7 - sqrt(17))/2", "(7 + sqrt(17))/2"}},
      {IntPolynomial{19, -9, 1}, 3, {"(9 - sqrt(5))/2", "(9 + sqrt(5))/2"}},
      {IntPolynomial{4, -22, 25, -9, 1},
       3,
       {"(9 - sqrt(5) - sqrt(38 - 2 sqrt(5)))/4", "(9 + sqrt(5) - sqrt(38 + 2 sqrt(5)))/4",
        "(9 - sqrt(5) + sqrt(38 - 2 sqrt(5)))/4", "(9 + sqrt(5) + sqrt(38 + 2 sqrt(5)))/4"}},
  };
}

template <class Range>
IntPolynomial factorization_product(const Range& factors) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (const auto& f : factors) p *= pow(f.factor, f.exponent);
  return p;
}

// Eigenvalue multiplicities in ascending eigenvalue order.
inline std::vector<unsigned> buckyball_multiplicities() { return {1, 3, 5, 3, 4, 9, 5, 3, 3, 5, 3, 5, 4, 4, 3}; }

// Tabulated two-digit values; these are truncated, not rounded.
inline std::vector<double> buckyball_truncated_eigenvalues() {
  return {0, 0.24, 0.69, 1.17, 1.43, 2, 2.38, 3.13, 3.38, 4.30, 4.43, 4.61, 5, 5.56, 5.61};
}

inline BigRational buckyball_c0() { return make_rational(239741, 376200); }

inline IntPolynomial buckyball_c_of_a_numerator() {
  return IntPolynomial{3344,    160806,  1153562, 3594661, 6334271, 7104785, 5406109, 2893077,
                       1109403, 306415,  60463,   8315,    757,     41,      1};
}

inline std::vector<IntPolynomial> buckyball_c_of_a_denominator_factors() {
  return {IntPolynomial{0, 1},         IntPolynomial{2, 1},         IntPolynomial{5, 1},
          IntPolynomial{3, 5, 1},      IntPolynomial{8, 7, 1},      IntPolynomial{11, 7, 1},
          IntPolynomial{19, 9, 1},     IntPolynomial{4, 22, 25, 9, 1}};
}

inline RationalFunction buckyball_c_of_a_literal() {
  IntPolynomial den = IntPolynomial::constant(1);
  for (const auto& f : buckyball_c_of_a_denominator_factors()) den *= f;
  return RationalFunction(buckyball_c_of_a_numerator(), den);
}

}  // namespace c60
