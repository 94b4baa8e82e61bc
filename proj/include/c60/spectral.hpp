#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "c60/matrix.hpp"
#include "c60/polynomial.hpp"
#include "c60/reference.hpp"

namespace c60 {

struct NumericSpectrum {
  std::vector<double> values;  // ascending
  double residual = 0;         // max_k |A v_k - lambda_k v_k|_inf
  std::size_t sweeps = 0;
};

// Cyclic Jacobi on the double image of m, sweeping until the off-diagonal
// Frobenius norm drops below off_tolerance.
inline NumericSpectrum numeric_eigenvalues(const RationalMatrix& m, double off_tolerance = 1e-14,
                                           std::size_t max_sweeps = 100) {
  if (!m.is_symmetric()) throw Error(Errc::NonSymmetric, "Jacobi needs a symmetric matrix");
  const std::size_t n = m.rows();
  const Matrix<double> original = to_double(m);
  Matrix<double> a = original;
  Matrix<double> v = Matrix<double>::identity(n);

  auto off_norm = [&] {
    double s = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (p != q) s += a(p, q) * a(p, q);
    return std::sqrt(s);
  };

  NumericSpectrum out;
  while (off_norm() >= off_tolerance) {
    if (out.sweeps == max_sweeps) throw Error(Errc::VerificationFailed, "Jacobi did not converge");
    ++out.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = a(k, k);
    for (std::size_t i = 0; i < n; ++i) {
      double av = 0;
      for (std::size_t j = 0; j < n; ++j) av += original(i, j) * v(j, k);
      out.residual = std::max(out.residual, std::abs(av - lambda * v(i, k)));
    }
    out.values.push_back(lambda);
  }
  std::sort(out.values.begin(), out.values.end());
  return out;
}

namespace detail {

inline std::vector<RationalPolynomial> sturm_chain(const IntPolynomial& p) {
  std::vector<RationalPolynomial> chain{to_rational(p), to_rational(p.derivative())};
  while (!chain.back().is_zero()) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

inline int sign_variations(const std::vector<RationalPolynomial>& chain, const BigRational& x) {
  int changes = 0, last = 0;
  for (const auto& f : chain) {
    const int s = sgn(f.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace detail

// Distinct real roots of p, ascending, each bisected to an interval of width
// below tolerance. Isolation uses a Sturm sequence; all arithmetic is exact.
inline std::vector<double> real_roots(const IntPolynomial& p, double tolerance = 1e-12) {
  if (p.degree() < 1) return {};
  const IntPolynomial f = squarefree_part(p);
  const auto chain = detail::sturm_chain(f);

  BigRational bound(1);
  for (const auto& c : f.coefficients()) {
    const BigRational candidate = make_rational(abs(c), abs(f.leading())) + 1;
    if (candidate > bound) bound = candidate;
  }
  const BigRational width_tolerance(tolerance);

  struct Interval {
    BigRational lo, hi;
  };
  std::vector<Interval> isolated;
  std::vector<Interval> pending{{-bound, bound}};
  while (!pending.empty()) {
    Interval iv = pending.back();
    pending.pop_back();
    const int count = detail::sign_variations(chain, iv.lo) - detail::sign_variations(chain, iv.hi);
    if (count == 0) continue;
    if (count == 1) {
      isolated.push_back(iv);
      continue;
    }
    const BigRational mid = (iv.lo + iv.hi) / 2;
    pending.push_back({iv.lo, mid});
    pending.push_back({mid, iv.hi});
  }

  std::vector<double> roots;
  for (auto iv : isolated) {
    // Exactly one root in (lo, hi]. Keep the invariant while halving.
    if (sgn(f.eval(iv.hi)) == 0) {
      roots.push_back(iv.hi.get_d());
      continue;
    }
    const int s_hi = sgn(f.eval(iv.hi));
    while (BigRational(iv.hi - iv.lo) >= width_tolerance) {
      const BigRational mid = (iv.lo + iv.hi) / 2;
      const int s_mid = sgn(f.eval(mid));
      if (s_mid == 0) {
        iv.lo = iv.hi = mid;
        break;
      }
      if (s_mid == s_hi) {
        iv.hi = mid;
      } else {
        iv.lo = mid;
      }
    }
    roots.push_back(BigRational((iv.lo + iv.hi) / 2).get_d());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

struct SpectralEntry {
  IntPolynomial factor;
  std::size_t root_index = 0;  // ascending among the factor's real roots
  std::string closed_form;
  unsigned multiplicity = 0;
  double numeric = 0;
};

struct SpectralTable {
  std::vector<SpectralEntry> entries;  // ascending numeric value

  unsigned total_multiplicity() const {
    unsigned t = 0;
    for (const auto& e : entries) t += e.multiplicity;
    return t;
  }
};

// One row per (factor, real root), multiplicity = exponent. The factors
// must multiply out to p exactly.
inline SpectralTable build_spectral_table(const IntPolynomial& p, std::span<const FactorPower> factors) {
  if (factorization_product(factors) != p) {
    throw Error(Errc::FactorMismatch, "factor product differs from the characteristic polynomial");
  }
  SpectralTable table;
  for (const auto& fp : factors) {
    const auto roots = real_roots(fp.factor);
    if (static_cast<int>(roots.size()) != fp.factor.degree()) {
      throw Error(Errc::FactorMismatch, "factor " + fp.factor.to_string() + " has non-real or repeated roots");
    }
    for (std::size_t r = 0; r < roots.size(); ++r) {
      table.entries.push_back({fp.factor, r, r < fp.root_hints.size() ? fp.root_hints[r] : fp.factor.to_string(),
                               fp.exponent, roots[r]});
    }
  }
  std::sort(table.entries.begin(), table.entries.end(),
            [](const SpectralEntry& a, const SpectralEntry& b) { return a.numeric < b.numeric; });
  return table;
}

inline SpectralTable build_spectral_table(const IntPolynomial& p) {
  const auto factors = buckyball_factorization();
  return build_spectral_table(p, factors);
}

// Splits an ascending sequence wherever consecutive values differ by more
// than tolerance.
inline std::vector<std::vector<double>> cluster_values(std::span<const double> sorted, double tolerance) {
  std::vector<std::vector<double>> clusters;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i] - sorted[i - 1] > tolerance) clusters.emplace_back();
    clusters.back().push_back(sorted[i]);
  }
  return clusters;
}

struct CrossValidation {
  std::size_t cluster_count = 0;
  std::vector<std::size_t> cluster_sizes;
  double max_deviation = 0;
  bool within_tolerance = false;
};

inline constexpr double kClusterTolerance = 1e-8;
inline constexpr double kClusterGapFallback = 1e-6;

// Clusters the numeric spectrum and matches each cluster to the nearest
// unused table root. Cluster sizes must equal the table multiplicities.
inline CrossValidation cross_validate(const NumericSpectrum& num, const SpectralTable& table,
                                      double tolerance = kClusterTolerance) {
  auto clusters = cluster_values(num.values, kClusterTolerance);
  if (clusters.size() != table.entries.size()) clusters = cluster_values(num.values, kClusterGapFallback);
  if (clusters.size() != table.entries.size()) {
    throw Error(Errc::MultiplicityMismatch, std::to_string(clusters.size()) + " clusters for " +
                                                std::to_string(table.entries.size()) + " table rows");
  }
  CrossValidation out;
  out.cluster_count = clusters.size();
  std::vector<bool> taken(table.entries.size(), false);
  for (const auto& cl : clusters) {
    const double centre = cl[cl.size() / 2];
    std::size_t best = table.entries.size();
    for (std::size_t e = 0; e < table.entries.size(); ++e) {
      if (taken[e]) continue;
      if (best == table.entries.size() ||
          std::abs(table.entries[e].numeric - centre) < std::abs(table.entries[best].numeric - centre))
        best = e;
    }
    taken[best] = true;
    const auto& entry = table.entries[best];
    if (cl.size() != entry.multiplicity) {
      throw Error(Errc::MultiplicityMismatch, "cluster near " + std::to_string(centre) + " has size " +
                                                  std::to_string(cl.size()) + ", expected " +
                                                  std::to_string(entry.multiplicity));
    }
    for (double x : cl) out.max_deviation = std::max(out.max_deviation, std::abs(x - entry.numeric));
    out.cluster_sizes.push_back(cl.size());
  }
  out.within_tolerance = out.max_deviation <= tolerance;
  return out;
}

}  // namespace c60
