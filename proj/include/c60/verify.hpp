#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "c60/charpoly.hpp"
#include "c60/graph.hpp"
#include "c60/green.hpp"
#include "c60/io.hpp"
#include "c60/reference.hpp"
#include "c60/sobolev.hpp"
#include "c60/spectral.hpp"
#include "c60/symmetry.hpp"

namespace c60 {

// Lazily computed buckyball quantities shared between checks. Not safe for
// concurrent use; each accessor fills its cache on first call.
class BuckyballContext {
 public:
  explicit BuckyballContext(unsigned threads = 1) : threads_(threads) {}

  unsigned threads() const { return threads_; }

  const PolyhedralGraph& graph() {
    if (!graph_) graph_ = buckyball();
    return *graph_;
  }
  const RationalMatrix& laplacian() {
    if (!laplacian_) laplacian_ = c60::laplacian(graph());
    return *laplacian_;
  }
  const IntPolynomial& charpoly() {
    if (!charpoly_) charpoly_ = c60::charpoly(laplacian(), threads_);
    return *charpoly_;
  }
  const RationalMatrix& g_star() {
    if (!g_star_) g_star_ = pseudo_green(laplacian(), &g_star_stats_);
    return *g_star_;
  }
  const BareissStats& g_star_stats() {
    g_star();
    return g_star_stats_;
  }
  const CofARoutes& c_of_a_routes() {
    if (!routes_) routes_ = c60::c_of_a_routes(laplacian(), charpoly(), buckyball_c_of_a_literal(), threads_);
    return *routes_;
  }
  const RationalFunction& c_of_a() { return c_of_a_routes().closed_form; }
  const RationalMatrix& green(const BigRational& a) {
    const std::string key = to_string(a);
    auto it = green_.find(key);
    if (it == green_.end()) it = green_.emplace(key, green_matrix(laplacian(), a)).first;
    return it->second;
  }
  const Involution& involution() {
    if (!involution_) involution_ = find_antipodal_involution(graph());
    return *involution_;
  }
  const BlockSplit& split() {
    if (!split_) split_ = block_split(laplacian(), involution());
    return *split_;
  }

 private:
  unsigned threads_;
  std::optional<PolyhedralGraph> graph_;
  std::optional<RationalMatrix> laplacian_;
  std::optional<IntPolynomial> charpoly_;
  std::optional<RationalMatrix> g_star_;
  BareissStats g_star_stats_;
  std::optional<CofARoutes> routes_;
  std::map<std::string, RationalMatrix> green_;
  std::optional<Involution> involution_;
  std::optional<BlockSplit> split_;
};

struct CheckResult {
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::ostream* trial_log = nullptr;  // JSONL, one record per trial
};

inline std::string format_deviation(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

inline std::vector<BigRational> diagonal_sample_points() {
  return {make_rational(1, 10), BigRational(1), BigRational(10)};
}

inline CheckResult check_graph_combinatorics(BuckyballContext& ctx) {
  const auto& g = ctx.graph();
  const auto census = face_census(g);
  bool cubic = true;
  for (Vertex v = 0; v < g.vertex_count(); ++v) cubic = cubic && g.degree(v) == 3;
  const std::size_t f = census.faces.size();
  const bool euler = g.vertex_count() + f == g.edge_count() + 2;
  const bool pass = g.vertex_count() == 60 && g.edge_count() == 90 && cubic && is_connected(g) && girth(g) == 5 &&
                    census.pentagon_count == 12 && census.hexagon_count == 20 && f == 32 && euler;
  return {pass, "v=" + std::to_string(g.vertex_count()) + " e=" + std::to_string(g.edge_count()) +
                    " f=" + std::to_string(f) + " pentagons=" + std::to_string(census.pentagon_count) +
                    " hexagons=" + std::to_string(census.hexagon_count) + " girth=" + std::to_string(girth(g))};
}

inline CheckResult check_charpoly_factorization(BuckyballContext& ctx) {
  const bool pass = ctx.charpoly() == factorization_product(buckyball_factorization());
  return {pass, "degree " + std::to_string(ctx.charpoly().degree())};
}

inline CheckResult check_c0_routes(BuckyballContext& ctx) {
  const BigRational diag = c0_via_diagonal(ctx.g_star());
  const BigRational trace = c0_via_trace(ctx.charpoly());
  const std::string decimal = to_decimal(diag, 5);
  const bool pass = diag == trace && diag == buckyball_c0() && decimal == "0.63727";
  return {pass, "diagonal=" + to_string(diag) + " trace=" + to_string(trace) + " decimal=" + decimal};
}

inline CheckResult check_c_of_a_routes(BuckyballContext& ctx) {
  const auto& r = ctx.c_of_a_routes();
  const bool pass = r.fitted == r.closed_form && r.literal && *r.literal == r.closed_form;
  return {pass, "degrees (" + std::to_string(r.closed_form.num().degree()) + "," +
                    std::to_string(r.closed_form.den().degree()) + ")"};
}

inline CheckResult check_eigenvalue_table(BuckyballContext& ctx) {
  const auto spectrum = numeric_eigenvalues(ctx.laplacian());
  const auto table = build_spectral_table(ctx.charpoly());
  const auto cv = cross_validate(spectrum, table);
  std::vector<unsigned> mult;
  for (const auto& e : table.entries) mult.push_back(e.multiplicity);
  std::vector<std::size_t> expected_sizes;
  for (unsigned m : buckyball_multiplicities()) expected_sizes.push_back(m);
  const double trace = std::accumulate(spectrum.values.begin(), spectrum.values.end(), 0.0);
  double weighted = 0;
  for (const auto& e : table.entries) weighted += e.multiplicity * e.numeric;
  const bool pass = mult == buckyball_multiplicities() && cv.cluster_sizes == expected_sizes &&
                    cv.within_tolerance && std::abs(trace - 180.0) <= 1e-8 && std::abs(weighted - 180.0) <= 1e-8 &&
                    spectrum.residual <= 1e-10;
  return {pass, "clusters=" + std::to_string(cv.cluster_count) + " max_deviation=" + format_deviation(cv.max_deviation) +
                    " residual=" + format_deviation(spectrum.residual)};
}

inline CheckResult check_moore_penrose(BuckyballContext& ctx) {
  const auto report = moore_penrose_check(ctx.laplacian(), ctx.g_star());
  return {report.all(), report.all() ? "all axioms hold" : "axiom violated"};
}

inline CheckResult check_diagonal_constancy(BuckyballContext& ctx) {
  bool pass = diagonal_is_constant(ctx.g_star());
  std::string detail = "G*";
  for (const auto& a : diagonal_sample_points()) {
    const auto& g = ctx.green(a);
    pass = pass && diagonal_is_constant(g) && g(0, 0) == ctx.c_of_a().eval(a);
    detail += " G(" + to_string(a) + ")";
  }
  return {pass, detail};
}

inline CheckResult check_limit_identity(BuckyballContext& ctx) {
  const BigRational value = limit_identity_value(ctx.c_of_a(), make_rational(1, 60));
  return {value == buckyball_c0(), "value at 0: " + to_string(value)};
}

inline CheckResult check_green_limit_entries(BuckyballContext& ctx, std::uint64_t seed) {
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (std::size_t i = 0; i < 60; ++i) entries.emplace_back(i, 0);  // row 0 by symmetry
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, 59);
  for (int k = 0; k < 20; ++k) entries.emplace_back(pick(rng), pick(rng));
  const auto r = green_limit_check(ctx.laplacian(), ctx.g_star(), ctx.charpoly(), entries, ctx.threads());
  std::string detail = std::to_string(entries.size()) + " entries";
  if (r.failing_entry) detail += ", failed at (" + std::to_string(r.failing_entry->first) + "," +
                                 std::to_string(r.failing_entry->second) + ")";
  return {r.ok, detail};
}

inline CheckResult check_block_reduction(BuckyballContext& ctx) {
  const auto& split = ctx.split();
  const bool conj = conjugation_is_block_diagonal(split, ctx.laplacian());
  half_spectra_check(split, ctx.charpoly(), ctx.threads());
  BareissStats block_stats;
  const bool g_star_ok = assemble_green_via_blocks(split, std::nullopt, &block_stats, ctx.threads()) == ctx.g_star();
  const bool g1_ok = assemble_green_via_blocks(split, BigRational(1), nullptr, ctx.threads()) == ctx.green(BigRational(1));
  const bool cheaper = block_stats.pivot_updates < ctx.g_star_stats().pivot_updates;
  return {conj && g_star_ok && g1_ok && cheaper,
          "half-size pivot updates " + std::to_string(block_stats.pivot_updates) + " vs full " +
              std::to_string(ctx.g_star_stats().pivot_updates)};
}

inline CheckResult check_sobolev_trials(BuckyballContext& ctx, const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  const BigRational c0 = c0_via_diagonal(ctx.g_star());
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const auto u = random_mean_zero_vector(rng, 60);
    const auto trial = sobolev_trial(u, ctx.laplacian(), c0, KernelMode::mean_zero());
    if (opt.trial_log) *opt.trial_log << trial_jsonl(t, trial);
    if (!trial.holds) {
      return {false, "trial " + std::to_string(t) + " violates the inequality"};
    }
  }
  return {true, std::to_string(opt.trials) + " trials hold"};
}

inline CheckResult check_sobolev_equality(BuckyballContext& ctx) {
  const BigRational c0 = c0_via_diagonal(ctx.g_star());
  const BigRational c1 = ctx.c_of_a().eval(BigRational(1));
  const auto& g1 = ctx.green(BigRational(1));
  for (std::size_t j = 0; j < 60; ++j) {
    const auto w = equality_witness(ctx.laplacian(), ctx.g_star(), j, KernelMode::mean_zero());
    const auto t = sobolev_trial(StateVector::column(ctx.g_star(), j), ctx.laplacian(), c0, KernelMode::mean_zero());
    if (!w.equality || w.diagonal != c0 || t.lhs != t.rhs) return {false, "G* column " + std::to_string(j)};
    const auto wd = equality_witness(ctx.laplacian(), g1, j, KernelMode::damped(BigRational(1)));
    const auto td = sobolev_trial(StateVector::column(g1, j), ctx.laplacian(), c1, KernelMode::damped(BigRational(1)));
    if (!wd.equality || wd.diagonal != c1 || td.lhs != td.rhs) return {false, "G(1) column " + std::to_string(j)};
  }
  return {true, "equality on all 60 columns of G* and G(1)"};
}

inline CheckResult check_sobolev_sharpness(BuckyballContext& ctx) {
  const BigRational smaller = c0_via_diagonal(ctx.g_star()) - make_rational(1, 1000000);
  const auto t = sobolev_trial(StateVector::column(ctx.g_star(), 0), ctx.laplacian(), smaller, KernelMode::mean_zero());
  return {!t.holds, "C0 - 1/10^6 " + std::string(t.holds ? "still holds" : "fails on column 0")};
}

// Criteria 1-3 recomputed on a seeded random relabeling.
inline CheckResult check_relabel_invariance(BuckyballContext& ctx, std::uint64_t seed) {
  std::vector<Vertex> perm(60);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = perm.size() - 1; i > 0; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i);
    std::swap(perm[i], perm[pick(rng)]);
  }
  const auto g = relabel(ctx.graph(), perm);
  const auto a = laplacian(g);
  const auto p = charpoly(a, ctx.threads());
  const auto gs = pseudo_green(a);
  const bool charpoly_ok = p == ctx.charpoly();
  const bool c0_ok = c0_via_diagonal(gs) == buckyball_c0() && c0_via_trace(p) == buckyball_c0();
  const auto routes = c_of_a_routes(a, p, buckyball_c_of_a_literal(), ctx.threads());
  const bool ca_ok = routes.closed_form == ctx.c_of_a();
  return {charpoly_ok && c0_ok && ca_ok, std::string("charpoly ") + (charpoly_ok ? "same" : "differs") + ", C0 " +
                                             (c0_ok ? "same" : "differs") + ", C(a) " + (ca_ok ? "same" : "differs")};
}

inline CheckResult guarded(const std::function<CheckResult()>& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

using CheckTable = std::map<std::string, CheckResult>;

// Every check, keyed by name. Sorted output order comes from the map.
inline CheckTable verify_all(BuckyballContext& ctx, const VerifyOptions& opt) {
  CheckTable out;
  out["graph_combinatorics"] = guarded([&] { return check_graph_combinatorics(ctx); });
  out["charpoly_factorization"] = guarded([&] { return check_charpoly_factorization(ctx); });
  out["c0_three_routes"] = guarded([&] { return check_c0_routes(ctx); });
  out["c_of_a_three_routes"] = guarded([&] { return check_c_of_a_routes(ctx); });
  out["eigenvalue_table"] = guarded([&] { return check_eigenvalue_table(ctx); });
  out["moore_penrose"] = guarded([&] { return check_moore_penrose(ctx); });
  out["diagonal_constancy"] = guarded([&] { return check_diagonal_constancy(ctx); });
  out["limit_identity"] = guarded([&] { return check_limit_identity(ctx); });
  out["green_limit_entries"] = guarded([&] { return check_green_limit_entries(ctx, opt.seed); });
  out["block_reduction"] = guarded([&] { return check_block_reduction(ctx); });
  out["sobolev_trials"] = guarded([&] { return check_sobolev_trials(ctx, opt); });
  out["sobolev_equality"] = guarded([&] { return check_sobolev_equality(ctx); });
  out["sobolev_sharpness"] = guarded([&] { return check_sobolev_sharpness(ctx); });
  out["relabel_invariance"] = guarded([&] { return check_relabel_invariance(ctx, opt.seed); });
  return out;
}

}  // namespace c60
