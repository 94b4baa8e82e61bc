#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "c60/elimination.hpp"
#include "c60/fit.hpp"
#include "c60/parallel.hpp"
#include "c60/polynomial.hpp"
#include "c60/rational_function.hpp"

namespace c60 {

// (1/n) 1 1^t, the orthogonal projection onto constant vectors.
inline RationalMatrix projection_e0(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "empty projection");
  return RationalMatrix(n, n, make_rational(1, static_cast<unsigned long>(n)));
}

inline void require_positive(const BigRational& a) {
  if (sgn(a) <= 0) throw Error(Errc::NonPositiveParameter, "damping parameter must be positive, got " + to_string(a));
}

// (A + a I)^-1
inline RationalMatrix green_matrix(const RationalMatrix& laplacian, const BigRational& a,
                                   BareissStats* stats = nullptr) {
  require_positive(a);
  return inverse(shifted(laplacian, a), stats);
}

// Columns `cols` of (A + a I)^-1, from one solve against the unit columns.
inline RationalMatrix green_columns(const RationalMatrix& laplacian, const BigRational& a,
                                    std::span<const std::size_t> cols) {
  require_positive(a);
  const std::size_t n = laplacian.rows();
  RationalMatrix rhs(n, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) rhs(cols[k], k) = 1;
  return bareiss_solve(shifted(laplacian, a), rhs);
}

inline bool annihilates_constants(const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigRational s(0);
    for (const auto& x : m.row(i)) s += x;
    if (sgn(s) != 0) return false;
  }
  return true;
}

// Moore-Penrose inverse of a symmetric matrix whose kernel is spanned by
// the constant vector, as (A + E0)^-1 - E0.
inline RationalMatrix pseudo_green(const RationalMatrix& laplacian, BareissStats* stats = nullptr) {
  if (!laplacian.is_symmetric()) throw Error(Errc::KernelMismatch, "matrix is not symmetric");
  if (!annihilates_constants(laplacian)) throw Error(Errc::KernelMismatch, "A 1 != 0");
  const RationalMatrix e0 = projection_e0(laplacian.rows());
  return inverse(laplacian + e0, stats) - e0;
}

struct MoorePenroseReport {
  bool aga_is_a = false;
  bool gag_is_g = false;
  bool ag_symmetric = false;
  bool ga_symmetric = false;
  bool ag_is_identity_minus_e0 = false;
  bool ga_is_identity_minus_e0 = false;
  bool g_e0_is_zero = false;
  bool e0_g_is_zero = false;

  bool all() const {
    return aga_is_a && gag_is_g && ag_symmetric && ga_symmetric && ag_is_identity_minus_e0 &&
           ga_is_identity_minus_e0 && g_e0_is_zero && e0_g_is_zero;
  }
};

// The four Penrose axioms plus A G = G A = I - E0 and G E0 = E0 G = 0.
inline MoorePenroseReport moore_penrose_check(const RationalMatrix& a, const RationalMatrix& g) {
  const std::size_t n = a.rows();
  const RationalMatrix e0 = projection_e0(n);
  const RationalMatrix ag = a * g;
  const RationalMatrix ga = g * a;
  const RationalMatrix complement = RationalMatrix::identity(n) - e0;
  const RationalMatrix zero(n, n);
  MoorePenroseReport r;
  r.aga_is_a = ag * a == a;
  r.gag_is_g = g * ag == g;
  r.ag_symmetric = ag.is_symmetric();
  r.ga_symmetric = ga.is_symmetric();
  r.ag_is_identity_minus_e0 = ag == complement;
  r.ga_is_identity_minus_e0 = ga == complement;
  r.g_e0_is_zero = g * e0 == zero;
  r.e0_g_is_zero = e0 * g == zero;
  return r;
}

inline bool diagonal_is_constant(const RationalMatrix& m) {
  for (std::size_t i = 1; i < std::min(m.rows(), m.cols()); ++i)
    if (m(i, i) != m(0, 0)) return false;
  return true;
}

// Route 1: the common diagonal entry of G*.
inline BigRational c0_via_diagonal(const RationalMatrix& g_star) {
  if (g_star.rows() == 0) throw Error(Errc::InvalidArgument, "empty matrix");
  for (std::size_t i = 1; i < g_star.rows(); ++i) {
    if (g_star(i, i) != g_star(0, 0)) {
      throw Error(Errc::DiagonalMismatch, "diagonal entry " + std::to_string(i) + " is " + to_string(g_star(i, i)) +
                                              ", entry 0 is " + to_string(g_star(0, 0)));
    }
  }
  return g_star(0, 0);
}

// Route 2: with p(x) = x q(x), the sum of reciprocals of the nonzero
// eigenvalues is -q'(0)/q(0); C0 is that sum divided by n.
inline BigRational c0_via_trace(const IntPolynomial& p) {
  if (p.degree() < 1 || sgn(p.coeff(0)) != 0) throw Error(Errc::InvalidArgument, "p must vanish at 0");
  const IntPolynomial q(std::vector<BigInt>(p.coefficients().begin() + 1, p.coefficients().end()));
  if (sgn(q.coeff(0)) == 0) throw Error(Errc::KernelMismatch, "zero is a repeated eigenvalue");
  const BigInt n = p.degree();
  return make_rational(-q.coeff(1), n * q.coeff(0));
}

// -(1/n) p'(-a) / p(-a), which is Q'(a) / (n Q(a)) with Q(a) = p(-a).
inline RationalFunction c_of_a_closed_form(const IntPolynomial& p) {
  const IntPolynomial q = p.negated_argument();
  return RationalFunction(q.derivative(), q * BigInt(p.degree()));
}

// Diagonal entry (j, j) of G(a) at each point.
inline std::vector<RationalSample> sample_green_diagonal(const RationalMatrix& laplacian,
                                                         std::span<const BigRational> points, std::size_t j = 0,
                                                         unsigned threads = 1) {
  const std::size_t col[] = {j};
  auto values = parallel_map(points.size(), threads, [&](std::size_t k) {
    return green_columns(laplacian, points[k], col)(j, 0);
  });
  std::vector<RationalSample> out;
  for (std::size_t k = 0; k < points.size(); ++k) out.push_back({points[k], values[k]});
  return out;
}

// 1, 2, ..., count
inline std::vector<BigRational> positive_integer_points(std::size_t count) {
  std::vector<BigRational> pts;
  for (std::size_t k = 1; k <= count; ++k) pts.emplace_back(static_cast<unsigned long>(k));
  return pts;
}

// Route 3 helper: samples G(a)(0,0) at a = 1, 2, ... and fits degrees
// (num_deg, den_deg) using num_deg + den_deg + 3 points.
inline RationalFunction c_of_a_fitted(const RationalMatrix& laplacian, int num_deg, int den_deg,
                                      unsigned threads = 1) {
  const auto pts = positive_integer_points(static_cast<std::size_t>(num_deg + den_deg + 3));
  const auto samples = sample_green_diagonal(laplacian, pts, 0, threads);
  return fit_rational_function(samples, num_deg, den_deg);
}

// Degree bounds of any entry of G(a): den is the squarefree part of
// p(-a), numerator one lower.
inline std::pair<int, int> green_entry_degrees(const IntPolynomial& p) {
  const int d = squarefree_part(p).degree();
  return {d - 1, d};
}

struct CofARoutes {
  RationalFunction fitted;
  RationalFunction closed_form;
  std::optional<RationalFunction> literal;
};

// Computes C(a) by fitting and by closed form, compares with the literal
// form when supplied, and throws RouteMismatch naming disagreeing routes.
inline CofARoutes c_of_a_routes(const RationalMatrix& laplacian, const IntPolynomial& p,
                                const std::optional<RationalFunction>& literal = std::nullopt, unsigned threads = 1) {
  const auto [nd, dd] = green_entry_degrees(p);
  CofARoutes r{c_of_a_fitted(laplacian, nd, dd, threads), c_of_a_closed_form(p), literal};
  std::string mismatch;
  if (!(r.fitted == r.closed_form)) mismatch += " fitted!=closed_form";
  if (literal && !(*literal == r.closed_form)) mismatch += " literal!=closed_form";
  if (literal && !(*literal == r.fitted)) mismatch += " literal!=fitted";
  if (!mismatch.empty()) throw Error(Errc::RouteMismatch, "C(a) routes disagree:" + mismatch);
  return r;
}

inline RationalFunction c_of_a(const RationalMatrix& laplacian, const IntPolynomial& p,
                               const std::optional<RationalFunction>& literal = std::nullopt, unsigned threads = 1) {
  return c_of_a_routes(laplacian, p, literal, threads).closed_form;
}

// f(a) - residue / a, as an exact rational function.
inline RationalFunction subtract_pole(const RationalFunction& f, const BigRational& residue) {
  return f - RationalFunction(RationalPolynomial::constant(residue), RationalPolynomial::x());
}

// Value at a = 0 of f(a) - residue / a; PoleRemains if that is still singular.
inline BigRational limit_identity_value(const RationalFunction& f, const BigRational& residue) {
  const RationalFunction g = subtract_pole(f, residue);
  if (g.has_pole_at(BigRational(0))) {
    throw Error(Errc::PoleRemains, "a = 0 is still a pole after removing " + to_string(residue) + "/a");
  }
  return g.eval(BigRational(0));
}

inline bool limit_identity_check(const RationalFunction& c_of_a, const BigRational& c0, std::size_t n = 60) {
  return limit_identity_value(c_of_a, make_rational(1, static_cast<unsigned long>(n))) == c0;
}

// Exact values at ascending positive points strictly decrease.
inline bool monotonicity_scan(const RationalFunction& f, std::span<const BigRational> points) {
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i] <= points[i - 1] || sgn(points[i - 1]) <= 0) {
      throw Error(Errc::InvalidArgument, "points must be positive and ascending");
    }
    if (!(f.eval(points[i]) < f.eval(points[i - 1]))) return false;
  }
  return true;
}

struct GreenLimitResult {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> failing_entry;
};

// Entrywise G* = lim_{a->0} (G(a) - E0 / a): each requested entry of G(a)
// is reconstructed as a rational function from exact samples, the pole of
// E0 / a is removed, and the value at 0 is compared with G*.
inline GreenLimitResult green_limit_check(const RationalMatrix& laplacian, const RationalMatrix& g_star,
                                          const IntPolynomial& p, std::span<const std::pair<std::size_t, std::size_t>> entries,
                                          unsigned threads = 1) {
  const std::size_t n = laplacian.rows();
  std::set<std::size_t> col_set;
  for (auto [i, j] : entries) col_set.insert(j);
  const std::vector<std::size_t> cols(col_set.begin(), col_set.end());
  const auto [nd, dd] = green_entry_degrees(p);
  const auto pts = positive_integer_points(static_cast<std::size_t>(nd + dd + 3));
  const auto solved = parallel_map(pts.size(), threads, [&](std::size_t k) { return green_columns(laplacian, pts[k], cols); });
  const BigRational residue = make_rational(1, static_cast<unsigned long>(n));

  GreenLimitResult out;
  for (auto [i, j] : entries) {
    const std::size_t c = static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), j) - cols.begin());
    std::vector<RationalSample> samples;
    for (std::size_t k = 0; k < pts.size(); ++k) samples.push_back({pts[k], solved[k](i, c)});
    const RationalFunction entry = fit_rational_function(samples, nd, dd);
    const RationalFunction regular = subtract_pole(entry, residue);
    if (regular.has_pole_at(BigRational(0)) || regular.eval(BigRational(0)) != g_star(i, j)) {
      out.ok = false;
      out.failing_entry = std::make_pair(i, j);
      return out;
    }
  }
  return out;
}

struct GreenBundle {
  RationalMatrix e0;
  RationalMatrix g_star;
  BigRational c0;
  RationalFunction c_of_a;

  BigRational evaluate(const BigRational& a) const {
    require_positive(a);
    return c_of_a.eval(a);
  }
};

// Assembles E0, G*, C0 and C(a), asserting C0 agrees between the diagonal
// and trace routes and that the C(a) routes agree.
inline GreenBundle build_green_bundle(const RationalMatrix& laplacian, const IntPolynomial& p,
                                      const std::optional<RationalFunction>& literal = std::nullopt,
                                      unsigned threads = 1) {
  GreenBundle b;
  b.e0 = projection_e0(laplacian.rows());
  b.g_star = pseudo_green(laplacian);
  b.c0 = c0_via_diagonal(b.g_star);
  if (b.c0 != c0_via_trace(p)) throw Error(Errc::RouteMismatch, "C0 diagonal route != trace route");
  b.c_of_a = c_of_a(laplacian, p, literal, threads);
  return b;
}

}  // namespace c60
