#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "c60/charpoly.hpp"
#include "c60/elimination.hpp"
#include "c60/graph.hpp"
#include "c60/green.hpp"
#include "c60/parallel.hpp"

namespace c60 {

// Relabeled Laplacian [[A0, A1], [A1, A0]] and its conjugate
// diag(A+, A-) = J^-1 A J with J = [[I, I], [I, -I]].
struct BlockSplit {
  std::vector<Vertex> order;  // order[new] = old
  RationalMatrix a0, a1;
  RationalMatrix a_plus, a_minus;
  RationalMatrix j_matrix;

  std::size_t half() const { return a0.rows(); }
};

inline RationalMatrix block_j_matrix(std::size_t half) {
  RationalMatrix j(2 * half, 2 * half);
  for (std::size_t i = 0; i < half; ++i) {
    j(i, i) = 1;
    j(i, i + half) = 1;
    j(i + half, i) = 1;
    j(i + half, i + half) = -1;
  }
  return j;
}

// Orbit representatives (smaller index of each pair, ascending) fill the
// first half; their images fill the second half in the same order.
inline BlockSplit block_split(const RationalMatrix& a, const Involution& sigma) {
  const std::size_t n = a.rows();
  if (!a.is_square() || sigma.perm.size() != n || n % 2 == 1) throw Error(Errc::BlockMismatch, "size mismatch");
  check_permutation(sigma.perm, n);
  for (Vertex i = 0; i < n; ++i) {
    if (sigma.perm[i] == i || sigma.perm[sigma.perm[i]] != i) {
      throw Error(Errc::BlockMismatch, "sigma is not a fixed-point-free involution");
    }
  }
  BlockSplit s;
  const std::size_t h = n / 2;
  s.order.resize(n);
  std::size_t k = 0;
  for (Vertex i = 0; i < n; ++i) {
    if (i < sigma.perm[i]) {
      s.order[k] = i;
      s.order[k + h] = sigma.perm[i];
      ++k;
    }
  }
  const RationalMatrix relabeled = a.permuted(s.order);
  s.a0 = relabeled.block(0, 0, h, h);
  s.a1 = relabeled.block(0, h, h, h);
  if (!(relabeled.block(h, h, h, h) == s.a0) || !(relabeled.block(h, 0, h, h) == s.a1)) {
    throw Error(Errc::BlockMismatch, "relabeled matrix is not of the form [[A0, A1], [A1, A0]]");
  }
  s.a_plus = s.a0 + s.a1;
  s.a_minus = s.a0 - s.a1;
  s.j_matrix = block_j_matrix(h);
  return s;
}

inline RationalMatrix relabeled(const RationalMatrix& a, const BlockSplit& split) { return a.permuted(split.order); }

inline RationalMatrix block_diagonal(const RationalMatrix& top, const RationalMatrix& bottom) {
  RationalMatrix out(top.rows() + bottom.rows(), top.cols() + bottom.cols());
  out.set_block(0, 0, top);
  out.set_block(top.rows(), top.cols(), bottom);
  return out;
}

// J^-1 = J / 2 and J^-1 A' J = diag(A+, A-), both exactly.
inline bool conjugation_is_block_diagonal(const BlockSplit& split, const RationalMatrix& a) {
  const RationalMatrix j_inv = inverse(split.j_matrix);
  if (!(j_inv == split.j_matrix * make_rational(1, 2))) return false;
  return j_inv * relabeled(a, split) * split.j_matrix == block_diagonal(split.a_plus, split.a_minus);
}

struct HalfSpectra {
  IntPolynomial plus;
  IntPolynomial minus;
  BigRational det_minus;
};

// charpoly(A+) charpoly(A-) = p, A+ 1 = 0 and A- nonsingular.
inline HalfSpectra half_spectra_check(const BlockSplit& split, const IntPolynomial& p, unsigned threads = 1) {
  HalfSpectra hs{charpoly(split.a_plus, threads), charpoly(split.a_minus, threads), determinant(split.a_minus)};
  if (!(hs.plus * hs.minus == p)) throw Error(Errc::SpectrumSplitMismatch, "charpoly(A+) charpoly(A-) != p");
  if (!annihilates_constants(split.a_plus)) throw Error(Errc::SpectrumSplitMismatch, "A+ 1 != 0");
  if (sgn(hs.det_minus) == 0) throw Error(Errc::SpectrumSplitMismatch, "A- is singular");
  return hs;
}

// G* (no parameter) or G(a) from the two half-size inverses, returned in the
// original labeling. Pivot work of both half solves accumulates in stats.
inline RationalMatrix assemble_green_via_blocks(const BlockSplit& split, const std::optional<BigRational>& a,
                                                BareissStats* stats = nullptr, unsigned threads = 1) {
  const std::size_t h = split.half();
  if (a) require_positive(*a);
  std::array<BareissStats, 2> local{};
  auto halves = parallel_map(2, threads, [&](std::size_t which) {
    const RationalMatrix& m = which == 0 ? split.a_plus : split.a_minus;
    if (a) return inverse(shifted(m, *a), &local[which]);
    if (which == 1) return inverse(m, &local[which]);
    const RationalMatrix e = projection_e0(h);
    return RationalMatrix(inverse(m + e, &local[which]) - e);
  });
  if (stats) {
    for (const auto& s : local) {
      stats->pivot_updates += s.pivot_updates;
      stats->eliminations += s.eliminations;
    }
  }
  const BigRational half_weight = make_rational(1, 2);
  const RationalMatrix g0 = (halves[0] + halves[1]) * half_weight;
  const RationalMatrix g1 = (halves[0] - halves[1]) * half_weight;

  const std::size_t n = 2 * h;
  RationalMatrix out(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const bool same_half = (p < h) == (q < h);
      const RationalMatrix& blk = same_half ? g0 : g1;
      out(split.order[p], split.order[q]) = blk(p % h, q % h);
    }
  }
  return out;
}

}  // namespace c60
