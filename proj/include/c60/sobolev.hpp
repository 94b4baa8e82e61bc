#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "c60/green.hpp"
#include "c60/matrix.hpp"

namespace c60 {

// Real vector of exact rationals indexed by vertex.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::vector<BigRational> values) : values_(std::move(values)) {}

  static StateVector constant(std::size_t n, const BigRational& v) { return StateVector(std::vector<BigRational>(n, v)); }
  static StateVector delta(std::size_t n, std::size_t j) {
    StateVector u = constant(n, BigRational(0));
    u.values_.at(j) = 1;
    return u;
  }
  static StateVector column(const RationalMatrix& m, std::size_t j) { return StateVector(m.column(j)); }

  std::size_t size() const { return values_.size(); }
  const BigRational& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<BigRational>& values() const { return values_; }

  BigRational sum() const {
    BigRational s(0);
    for (const auto& x : values_) s += x;
    return s;
  }
  bool mean_zero() const { return sgn(sum()) == 0; }

  BigRational max_abs() const {
    BigRational m(0);
    for (const auto& x : values_)
      if (abs_value(x) > m) m = abs_value(x);
    return m;
  }

  StateVector scaled(const BigRational& s) const {
    StateVector out = *this;
    for (auto& x : out.values_) x *= s;
    return out;
  }

 private:
  std::vector<BigRational> values_;
};

// u^t M v
inline BigRational bilinear(const StateVector& u, const RationalMatrix& m, const StateVector& v) {
  if (m.rows() != u.size() || m.cols() != v.size()) throw Error(Errc::InvalidArgument, "bilinear form size mismatch");
  BigRational total(0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (sgn(u[i]) == 0) continue;
    BigRational row(0);
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) row += m(i, j) * v[j];
    total += u[i] * row;
  }
  return total;
}

// E(u): the edge sum over the off-diagonal weights -A(i,j) must equal the
// quadratic form u^t A u, which holds whenever A has zero row sums.
inline BigRational energy(const StateVector& u, const RationalMatrix& a) {
  if (u.size() != a.rows()) throw Error(Errc::InvalidArgument, "state vector length mismatch");
  BigRational edge_sum(0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      const BigRational diff = u[i] - u[j];
      edge_sum -= a(i, j) * diff * diff;
    }
  }
  const BigRational form = bilinear(u, a, u);
  if (edge_sum != form) {
    throw Error(Errc::FormMismatch, "edge sum " + to_string(edge_sum) + " != quadratic form " + to_string(form));
  }
  return form;
}

// E(a, u) = E(u) + a sum u(j)^2 = u^t (A + a I) u
inline BigRational energy_a(const StateVector& u, const RationalMatrix& a, const BigRational& damping) {
  require_positive(damping);
  BigRational squares(0);
  for (const auto& x : u.values()) squares += x * x;
  const BigRational value = energy(u, a) + damping * squares;
  if (value != bilinear(u, shifted(a, damping), u)) throw Error(Errc::FormMismatch, "damped energy forms disagree");
  return value;
}

// Which inequality is in play: mean-zero vectors with the pseudo-Green
// kernel and E(u), or all vectors with G(a) and E(a, u).
struct KernelMode {
  std::optional<BigRational> damping;

  static KernelMode mean_zero() { return {}; }
  static KernelMode damped(const BigRational& a) {
    require_positive(a);
    return {a};
  }
  bool is_damped() const { return damping.has_value(); }

  // The matrix of the inner product: A or A + a I.
  RationalMatrix form(const RationalMatrix& a) const { return damping ? shifted(a, *damping) : a; }
  BigRational energy_of(const StateVector& u, const RationalMatrix& a) const {
    return damping ? energy_a(u, a, *damping) : energy(u, a);
  }
};

inline void require_admissible(const StateVector& u, const KernelMode& mode) {
  if (!mode.is_damped() && !u.mean_zero()) {
    throw Error(Errc::PreconditionViolation, "mean-zero mode needs u(0) + ... + u(n-1) = 0");
  }
}

struct ReproducingResult {
  bool ok = true;
  std::optional<std::size_t> failing_index;
};

// u(j) = (u, K delta_j) in the mode's inner product, for every j.
inline ReproducingResult reproducing_check(const StateVector& u, const RationalMatrix& a, const RationalMatrix& kernel,
                                           const KernelMode& mode) {
  require_admissible(u, mode);
  const RationalMatrix reproduced = mode.form(a) * kernel;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (bilinear(u, reproduced, StateVector::delta(u.size(), j)) != u[j]) return {false, j};
  }
  return {};
}

struct SobolevTrial {
  BigRational lhs;     // (max |u(j)|)^2
  BigRational energy;  // E(u) or E(a, u)
  BigRational rhs;     // c * energy
  bool holds = false;
};

inline SobolevTrial sobolev_trial(const StateVector& u, const RationalMatrix& a, const BigRational& c,
                                  const KernelMode& mode) {
  require_admissible(u, mode);
  SobolevTrial t;
  const BigRational m = u.max_abs();
  t.lhs = m * m;
  t.energy = mode.energy_of(u, a);
  t.rhs = c * t.energy;
  t.holds = t.lhs <= t.rhs;
  return t;
}

struct EqualityWitness {
  std::size_t j0 = 0;
  BigRational diagonal;  // K(j0, j0), the sharp constant
  BigRational energy;    // energy of column j0, equal to the diagonal
  BigRational lhs;       // (max |K(j, j0)|)^2
  BigRational rhs;       // diagonal * energy
  bool equality = false;
};

// Checks the extremal chain for column j0 of the kernel: the diagonal entry
// has the largest magnitude, the column's energy equals that entry, and so
// (max |u|)^2 = C * E(u) with C the diagonal entry.
inline EqualityWitness equality_witness(const RationalMatrix& a, const RationalMatrix& kernel, std::size_t j0,
                                        const KernelMode& mode) {
  if (j0 >= kernel.cols()) throw Error(Errc::InvalidArgument, "column index out of range");
  const StateVector column = StateVector::column(kernel, j0);
  EqualityWitness w;
  w.j0 = j0;
  w.diagonal = kernel(j0, j0);
  for (std::size_t i = 0; i < column.size(); ++i) {
    if (abs_value(column[i]) > abs_value(w.diagonal)) {
      throw Error(Errc::MaxNotAtDiagonal, "entry (" + std::to_string(i) + ", " + std::to_string(j0) +
                                              ") exceeds the diagonal in magnitude");
    }
  }
  w.energy = mode.energy_of(column, a);
  w.lhs = w.diagonal * w.diagonal;
  w.rhs = w.diagonal * w.energy;
  w.equality = w.energy == w.diagonal && w.lhs == w.rhs;
  return w;
}

// |(u, G* delta_j)_A|^2 <= E(u) E(G* delta_j) for every j, and hence
// u(j)^2 <= C0 E(u) entrywise.
inline bool schwarz_step_check(const StateVector& u, const RationalMatrix& a, const RationalMatrix& g_star) {
  require_admissible(u, KernelMode::mean_zero());
  const BigRational eu = energy(u, a);
  const BigRational c0 = g_star(0, 0);
  for (std::size_t j = 0; j < u.size(); ++j) {
    const StateVector col = StateVector::column(g_star, j);
    const BigRational ip = bilinear(u, a, col);
    if (ip * ip > eu * energy(col, a)) return false;
    if (u[j] * u[j] > c0 * eu) return false;
  }
  return true;
}

// Numerators uniform in [-100, 100], denominators in [1, 10].
inline StateVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-100, 100);
  std::uniform_int_distribution<long> den(1, 10);
  std::vector<BigRational> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long p = num(rng);
    const long q = den(rng);
    v.push_back(make_rational(p, q));
  }
  return StateVector(std::move(v));
}

// random_vector with its exact mean subtracted.
inline StateVector random_mean_zero_vector(std::mt19937_64& rng, std::size_t n) {
  const StateVector raw = random_vector(rng, n);
  const BigRational mean = raw.sum() / BigRational(static_cast<unsigned long>(n));
  std::vector<BigRational> v = raw.values();
  for (auto& x : v) x -= mean;
  return StateVector(std::move(v));
}

}  // namespace c60
