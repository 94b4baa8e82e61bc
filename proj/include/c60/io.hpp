#pragma once

#include <cstdio>
#include <span>
#include <sstream>
#include <string>

#include "json.hpp"

#include "c60/graph.hpp"
#include "c60/green.hpp"
#include "c60/sobolev.hpp"
#include "c60/spectral.hpp"
#include "c60/symmetry.hpp"

namespace c60 {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

inline json to_json(const BigRational& r) { return to_string(r); }

// Ascending coefficients as decimal strings.
inline json to_json(const IntPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

inline json to_json(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& x : m.row(i)) row.push_back(to_string(x));
    out.push_back(std::move(row));
  }
  return out;
}

inline json to_json(const RationalFunction& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

inline BigRational rational_from_json(const json& j) { return parse_rational(j.get<std::string>()); }

inline IntPolynomial polynomial_from_json(const json& j) {
  std::vector<BigInt> c;
  for (const auto& x : j) c.emplace_back(x.get<std::string>(), 10);
  return IntPolynomial(std::move(c));
}

// {"n", "edges", "faces"}; edges as sorted pairs i < j. Faces are present
// only for embedded graphs.
inline json graph_json(const PolyhedralGraph& g) {
  json out;
  out["n"] = g.vertex_count();
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  out["edges"] = std::move(edges);
  json faces = json::array();
  if (g.has_rotation())
    for (const auto& f : face_census(g).faces) faces.push_back(f);
  out["faces"] = std::move(faces);
  return out;
}

inline std::string graph_dot(const PolyhedralGraph& g) {
  std::ostringstream os;
  os << "graph buckyball {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (auto [a, b] : g.edges()) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

// factor,root_index,numeric,multiplicity
inline std::string spectral_table_csv(const SpectralTable& table) {
  std::ostringstream os;
  os << "factor,root_index,numeric,multiplicity\n";
  for (const auto& e : table.entries)
    os << e.factor.to_string() << ',' << e.root_index << ',' << format_double(e.numeric) << ',' << e.multiplicity
       << '\n';
  return os.str();
}

inline std::string eigenvalues_csv(const NumericSpectrum& spectrum) {
  std::ostringstream os;
  os << "index,eigenvalue\n";
  for (std::size_t i = 0; i < spectrum.values.size(); ++i) os << i << ',' << format_double(spectrum.values[i]) << '\n';
  return os.str();
}

inline json spectral_table_json(const SpectralTable& table) {
  json rows = json::array();
  for (const auto& e : table.entries) {
    rows.push_back({{"factor", to_json(e.factor)},
                    {"factor_text", e.factor.to_string()},
                    {"root_index", e.root_index},
                    {"closed_form", e.closed_form},
                    {"numeric", e.numeric},
                    {"multiplicity", e.multiplicity}});
  }
  return rows;
}

inline json block_split_json(const BlockSplit& split, const HalfSpectra& spectra) {
  return {{"order", split.order},
          {"a0", to_json(split.a0)},
          {"a1", to_json(split.a1)},
          {"charpoly_plus", to_json(spectra.plus)},
          {"charpoly_minus", to_json(spectra.minus)}};
}

// One JSONL record per Sobolev trial.
inline std::string trial_jsonl(std::size_t index, const SobolevTrial& t) {
  json rec{{"trial", index},
           {"lhs", to_string(t.lhs)},
           {"energy", to_string(t.energy)},
           {"rhs", to_string(t.rhs)},
           {"holds", t.holds}};
  return rec.dump() + "\n";
}

// a, C(a), C(a) - 1/(n a), exact and as decimals.
inline std::string sample_ca_csv(const RationalFunction& c_of_a, std::span<const BigRational> points, std::size_t n) {
  std::ostringstream os;
  os << "a,c_a,c_a_decimal,c_a_minus_pole,c_a_minus_pole_decimal\n";
  const BigRational residue = make_rational(1, static_cast<unsigned long>(n));
  for (const auto& a : points) {
    const BigRational c = c_of_a.eval(a);
    const BigRational reg = c - residue / a;
    os << to_string(a) << ',' << to_string(c) << ',' << format_double(c.get_d()) << ',' << to_string(reg) << ','
       << format_double(reg.get_d()) << '\n';
  }
  return os.str();
}

}  // namespace c60
