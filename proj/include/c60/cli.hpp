#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "c60/io.hpp"
#include "c60/verify.hpp"

namespace c60::cli {

enum class Command { BuildGraph, Charpoly, Spectrum, Green, Constants, VerifyAll, SampleCa };
enum class Format { Json, Csv, Dot };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitConfigError = 2;

struct RunConfig {
  Command command = Command::VerifyAll;
  std::optional<Format> format;  // per-command default when unset
  std::string output_path;       // stdout when empty
  std::vector<BigRational> a_values;
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  unsigned parallel = 1;
  bool eigenvalues = false;    // spectrum: emit the sorted eigenvalues instead of the table
  std::string trial_log_path;  // verify-all: JSONL trial records
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const std::map<std::string, Command>& command_names() {
  static const std::map<std::string, Command> names{
      {"build-graph", Command::BuildGraph}, {"charpoly", Command::Charpoly},   {"spectrum", Command::Spectrum},
      {"green", Command::Green},            {"constants", Command::Constants}, {"verify-all", Command::VerifyAll},
      {"sample-ca", Command::SampleCa}};
  return names;
}

inline std::vector<BigRational> parse_a_values(const std::string& text) {
  std::vector<BigRational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    BigRational a;
    try {
      a = parse_rational(item);
    } catch (const Error& e) {
      throw ConfigError(std::string("--a-values: ") + e.what());
    }
    if (sgn(a) <= 0) throw ConfigError("--a-values must be positive, got " + item);
    out.push_back(a);
  }
  if (out.empty()) throw ConfigError("--a-values is empty");
  return out;
}

// Throws ConfigError on invalid input. Returns nullopt when help was printed.
inline std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Exact buckyball Laplacian, Green matrices and sharp Sobolev constants"};
  std::string command;
  std::string format;
  std::string a_values;
  RunConfig cfg;
  std::vector<std::string> names;
  for (const auto& [k, v] : command_names()) names.push_back(k);
  app.add_option("command", command, "build-graph | charpoly | spectrum | green | constants | verify-all | sample-ca")
      ->required()
      ->check(CLI::IsMember(names));
  app.add_option("--output", cfg.output_path, "Output file (default: stdout)");
  app.add_option("--format", format, "json | csv | dot")->check(CLI::IsMember({"json", "csv", "dot"}));
  app.add_option("--a-values", a_values, "Comma-separated positive rationals, e.g. 1/10,1,10");
  app.add_option("--seed", cfg.seed, "Seed for randomized trials and relabeling");
  app.add_option("--trials", cfg.trials, "Number of random Sobolev trials");
  app.add_option("--parallel", cfg.parallel, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--eigenvalues", cfg.eigenvalues, "spectrum: emit the 60 sorted eigenvalues");
  app.add_option("--trial-log", cfg.trial_log_path, "verify-all: write per-trial JSONL records here");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  cfg.command = command_names().at(command);
  if (format == "json") cfg.format = Format::Json;
  if (format == "csv") cfg.format = Format::Csv;
  if (format == "dot") cfg.format = Format::Dot;
  if (!a_values.empty()) cfg.a_values = parse_a_values(a_values);
  return cfg;
}

namespace detail {

inline Format resolve_format(const RunConfig& cfg, std::initializer_list<Format> allowed) {
  const Format f = cfg.format.value_or(*allowed.begin());
  for (Format a : allowed)
    if (a == f) return f;
  throw ConfigError("format not supported by this command");
}

inline std::string dump(json j) {
  j["schema_version"] = kSchemaVersion;
  return j.dump(2) + "\n";
}

// Default grid for C(a) sampling: 2^k for k = -6..6.
inline std::vector<BigRational> default_ca_grid() {
  std::vector<BigRational> pts;
  for (int k = -6; k <= 6; ++k) pts.push_back(k < 0 ? make_rational(1, BigInt(1) << -k) : BigRational(BigInt(1) << k));
  return pts;
}

struct Emitted {
  std::string text;
  bool ok = true;
};

inline Emitted execute(const RunConfig& cfg) {
  BuckyballContext ctx(cfg.parallel);
  switch (cfg.command) {
    case Command::BuildGraph: {
      const Format f = resolve_format(cfg, {Format::Json, Format::Dot});
      if (f == Format::Dot) return {graph_dot(ctx.graph())};
      return {dump(graph_json(ctx.graph()))};
    }
    case Command::Charpoly: {
      resolve_format(cfg, {Format::Json});
      const auto factors = buckyball_factorization();
      json fj = json::array();
      for (const auto& fp : factors) fj.push_back({{"factor", to_json(fp.factor)}, {"exponent", fp.exponent}});
      const bool match = ctx.charpoly() == factorization_product(factors);
      return {dump({{"coefficients", to_json(ctx.charpoly())},
                    {"factorization", fj},
                    {"matches_factorization", match}}),
              match};
    }
    case Command::Spectrum: {
      const Format f = resolve_format(cfg, {Format::Json, Format::Csv});
      const auto spectrum = numeric_eigenvalues(ctx.laplacian());
      const auto table = build_spectral_table(ctx.charpoly());
      if (f == Format::Csv) return {cfg.eigenvalues ? eigenvalues_csv(spectrum) : spectral_table_csv(table)};
      const auto cv = cross_validate(spectrum, table);
      return {dump({{"table", spectral_table_json(table)},
                    {"eigenvalues", spectrum.values},
                    {"residual", spectrum.residual},
                    {"cross_validation",
                     {{"clusters", cv.cluster_count},
                      {"max_deviation", cv.max_deviation},
                      {"within_tolerance", cv.within_tolerance}}}}),
              cv.within_tolerance};
    }
    case Command::Green: {
      resolve_format(cfg, {Format::Json});
      const auto hs = half_spectra_check(ctx.split(), ctx.charpoly(), cfg.parallel);
      json greens = json::object();
      for (const auto& a : cfg.a_values) greens[to_string(a)] = to_json(ctx.green(a));
      return {dump({{"c0", to_json(c0_via_diagonal(ctx.g_star()))},
                    {"g_star", to_json(ctx.g_star())},
                    {"green", greens},
                    {"block_split", block_split_json(ctx.split(), hs)}})};
    }
    case Command::Constants: {
      resolve_format(cfg, {Format::Json});
      const BigRational c0 = c0_via_diagonal(ctx.g_star());
      const auto& routes = ctx.c_of_a_routes();
      const auto& ca = routes.closed_form;
      json d_factors = json::array();
      for (const auto& f : buckyball_c_of_a_denominator_factors()) d_factors.push_back(to_json(f));
      json checks{{"c0_diagonal_equals_trace", c0 == c0_via_trace(ctx.charpoly())},
                  {"c0_equals_reference", c0 == buckyball_c0()},
                  {"c_of_a_routes_agree", routes.fitted == ca && routes.literal && *routes.literal == ca},
                  {"limit_identity", limit_identity_check(ca, c0)}};
      bool ok = true;
      for (const auto& [k, v] : checks.items()) ok = ok && v.get<bool>();
      return {dump({{"c0", to_json(c0)},
                    {"c0_decimal", c0.get_d()},
                    {"N", to_json(ca.num())},
                    {"D", to_json(ca.den())},
                    {"D_factors", d_factors},
                    {"checks", checks}}),
              ok};
    }
    case Command::VerifyAll: {
      resolve_format(cfg, {Format::Json});
      std::ofstream log;
      VerifyOptions opt{cfg.seed, cfg.trials, nullptr};
      if (!cfg.trial_log_path.empty()) {
        log.open(cfg.trial_log_path);
        if (!log) throw ConfigError("cannot open " + cfg.trial_log_path);
        opt.trial_log = &log;
      }
      const auto results = verify_all(ctx, opt);
      json checks = json::object();
      bool ok = true;
      for (const auto& [name, r] : results) {
        checks[name] = {{"pass", r.pass}, {"detail", r.detail}};
        ok = ok && r.pass;
      }
      return {dump({{"checks", checks}, {"passed", ok}, {"seed", cfg.seed}, {"trials", cfg.trials}}), ok};
    }
    case Command::SampleCa: {
      const Format f = resolve_format(cfg, {Format::Csv, Format::Json});
      const auto pts = cfg.a_values.empty() ? default_ca_grid() : cfg.a_values;
      const auto& ca = ctx.c_of_a();
      if (f == Format::Csv) return {sample_ca_csv(ca, pts, 60)};
      json rows = json::array();
      for (const auto& a : pts) {
        const BigRational c = ca.eval(a);
        const BigRational reg = c - make_rational(1, 60) / a;
        rows.push_back({{"a", to_string(a)}, {"c_a", to_string(c)}, {"c_a_minus_pole", to_string(reg)}});
      }
      return {dump({{"samples", rows}})};
    }
  }
  throw ConfigError("unknown command");
}

}  // namespace detail

// Exit codes: 0 success, 1 failed verification or computation, 2 bad config.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  detail::Emitted emitted;
  try {
    emitted = detail::execute(cfg);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  if (cfg.output_path.empty()) {
    out << emitted.text;
  } else {
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file) {
      err << "config error: cannot open " << cfg.output_path << "\n";
      return kExitConfigError;
    }
    file << emitted.text;
  }
  return emitted.ok ? kExitOk : kExitVerificationFailed;
}

inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> cfg;
  try {
    cfg = parse_args(argc, argv, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
  if (!cfg) return kExitOk;
  return run(*cfg, out, err);
}

}  // namespace c60::cli
