#pragma once

// Text formats: node tables and grid evaluations as CSV, spectral sets,
// coefficient sets and reports as JSON. Floats use the shortest
// round-trip representation, so output is byte-for-byte reproducible.

#include <json.hpp>

#include <charconv>
#include <complex>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "rhodonea/analysis.hpp"
#include "rhodonea/data_grid.hpp"
#include "rhodonea/nodes.hpp"
#include "rhodonea/spectral.hpp"
#include "rhodonea/transform.hpp"

namespace rhodonea::io {

using json = nlohmann::ordered_json;

inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  if (res.ec != std::errc{}) throw std::runtime_error("float formatting failed");
  return std::string(buf, res.ptr);
}

inline void write_nodes_csv(std::ostream& os, const FrequencyPair& freq) {
  const NodalIndexSet set(freq);
  os << "i1,i2,r,theta,x,y,weight\n";
  for (const auto& i : set) {
    const DiskPoint p = node_coords(freq, i);
    os << i.i1 << ',' << i.i2 << ',' << format_double(p.r) << ',' << format_double(p.theta) << ','
       << format_double(p.x) << ',' << format_double(p.y) << ',' << format_double(set.weight(i)) << '\n';
  }
}

/// Counts that go with a node table.
inline json nodes_metadata(const FrequencyPair& freq) {
  const NodalIndexSet set(freq);
  int boundary = 0;
  for (const auto& i : set) boundary += i.i1 == 0;
  const NodeSet pts = node_set(freq);
  return json{{"m1", freq.m1()},
              {"m2", freq.m2()},
              {"count", set.size()},
              {"distinct_points", pts.points.size()},
              {"boundary_count", boundary},
              {"center_multiplicity", pts.center_multiplicity}};
}

inline json nodes_json(const FrequencyPair& freq) {
  json out = nodes_metadata(freq);
  json rows = json::array();
  const NodalIndexSet set(freq);
  for (const auto& i : set) {
    const DiskPoint p = node_coords(freq, i);
    rows.push_back(json{{"i1", i.i1}, {"i2", i.i2}, {"r", p.r}, {"theta", p.theta},
                        {"x", p.x}, {"y", p.y}, {"weight", set.weight(i)}});
  }
  out["nodes"] = std::move(rows);
  return out;
}

inline json spectral_json(const SpectralIndexSet& gamma) {
  json idx = json::array();
  for (const auto& g : gamma) idx.push_back({g.g1, g.g2});
  json ups = json::array();
  for (const auto& g : gamma.upsilon()) ups.push_back({g.g1, g.g2});
  return json{{"kind", std::string(to_string(gamma.kind()))},
              {"m1", gamma.freq().m1()},
              {"m2", gamma.freq().m2()},
              {"indices", std::move(idx)},
              {"upsilon", std::move(ups)}};
}

inline std::string_view angular_name(Angular a) {
  switch (a) {
    case Angular::exp: return "exp";
    case Angular::cos: return "cos";
    case Angular::sin: return "sin";
  }
  return "exp";
}

inline Angular parse_angular(const std::string& s) {
  if (s == "exp") return Angular::exp;
  if (s == "cos") return Angular::cos;
  if (s == "sin") return Angular::sin;
  throw std::invalid_argument("unknown angular factor '" + s + "'");
}

template <class T>
json coefficients_json(const CoefficientSet<T>& c) {
  json entries = json::array();
  for (std::size_t p = 0; p < c.size(); ++p) {
    json e{{"g1", c.indices[p].g1}, {"g2", c.indices[p].g2}};
    if constexpr (std::is_same_v<T, complex>) {
      e["re"] = c.values[p].real();
      e["im"] = c.values[p].imag();
    } else {
      e["angular"] = std::string(angular_name(c.angular[p]));
      e["re"] = c.values[p];
      e["im"] = 0.0;
    }
    entries.push_back(std::move(e));
  }
  return json{{"m1", c.freq.m1()},
              {"m2", c.freq.m2()},
              {"spectral_kind", c.kind},
              {"basis", std::string(to_string(CoefficientSet<T>::basis))},
              {"entries", std::move(entries)}};
}

inline ComplexCoefficients complex_coefficients_from_json(const json& j) {
  ComplexCoefficients c{FrequencyPair(j.at("m1").get<int>(), j.at("m2").get<int>()),
                        j.at("spectral_kind").get<std::string>(), {}, {}, {}};
  for (const auto& e : j.at("entries")) {
    c.indices.push_back({e.at("g1").get<int>(), e.at("g2").get<int>()});
    c.angular.push_back(Angular::exp);
    c.values.emplace_back(e.at("re").get<double>(), e.at("im").get<double>());
  }
  return c;
}

inline RealCoefficients real_coefficients_from_json(const json& j) {
  RealCoefficients c{FrequencyPair(j.at("m1").get<int>(), j.at("m2").get<int>()),
                     j.at("spectral_kind").get<std::string>(), {}, {}, {}};
  for (const auto& e : j.at("entries")) {
    c.indices.push_back({e.at("g1").get<int>(), e.at("g2").get<int>()});
    c.angular.push_back(parse_angular(e.at("angular").get<std::string>()));
    c.values.push_back(e.at("re").get<double>());
  }
  return c;
}

/// Row-major r, theta, value (real) or r, theta, re, im (complex).
template <class T>
void write_grid_csv(std::ostream& os, std::span<const double> radii, std::span<const double> angles,
                    std::span<const T> values) {
  if (values.size() != radii.size() * angles.size())
    throw std::invalid_argument("grid values do not match the grid dimensions");
  if constexpr (std::is_same_v<T, complex>)
    os << "r,theta,re,im\n";
  else
    os << "r,theta,value\n";
  for (std::size_t a = 0; a < radii.size(); ++a)
    for (std::size_t b = 0; b < angles.size(); ++b) {
      const T& v = values[a * angles.size() + b];
      os << format_double(radii[a]) << ',' << format_double(angles[b]) << ',';
      if constexpr (std::is_same_v<T, complex>)
        os << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
      else
        os << format_double(v) << '\n';
    }
}

namespace detail {

inline bool parse_number(std::string_view tok, double& out) {
  while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
  while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' || tok.back() == '\r')) tok.remove_suffix(1);
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  if (tok.empty()) return false;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return res.ec == std::errc{} && res.ptr == tok.data() + tok.size();
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= line.size(); ++k)
    if (k == line.size() || line[k] == ',' || line[k] == ';') {
      out.push_back(line.substr(start, k - start));
      start = k + 1;
    }
  return out;
}

}  // namespace detail

/// Samples on I^(m). Each data line holds either
///   value | re,im              (canonical order), or
///   i1,i2,value | i1,i2,re,im  (explicit index, any order).
/// Blank lines and lines starting with '#' are skipped, as is a
/// non-numeric first line (header).
inline ComplexGrid read_samples(std::istream& is, const FrequencyPair& freq) {
  std::vector<complex> seq;
  std::vector<std::pair<NodeIndex, complex>> indexed;
  std::string line;
  int lineno = 0;
  bool first_data = true;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line == "\r" || line[0] == '#') continue;
    const auto fields = detail::split_fields(line);
    std::vector<double> nums(fields.size());
    bool ok = true;
    for (std::size_t k = 0; k < fields.size() && ok; ++k) ok = detail::parse_number(fields[k], nums[k]);
    if (!ok) {
      if (first_data) {
        first_data = false;
        continue;
      }
      throw std::invalid_argument("malformed samples file: line " + std::to_string(lineno));
    }
    first_data = false;
    switch (nums.size()) {
      case 1: seq.emplace_back(nums[0], 0.0); break;
      case 2: seq.emplace_back(nums[0], nums[1]); break;
      case 3:
      case 4: {
        const NodeIndex i{static_cast<int>(nums[0]), static_cast<int>(nums[1])};
        if (i.i1 != nums[0] || i.i2 != nums[1])
          throw std::invalid_argument("malformed samples file: non-integer index on line " +
                                      std::to_string(lineno));
        indexed.emplace_back(i, complex(nums[2], nums.size() == 4 ? nums[3] : 0.0));
        break;
      }
      default:
        throw std::invalid_argument("malformed samples file: line " + std::to_string(lineno));
    }
  }
  if (!seq.empty() && !indexed.empty())
    throw std::invalid_argument("malformed samples file: mixes indexed and sequential rows");
  if (indexed.empty()) return ComplexGrid(freq, std::move(seq));

  ComplexGrid out(freq);
  const auto expected = out.size();
  if (indexed.size() != expected)
    throw std::invalid_argument("expected " + std::to_string(expected) + " values, got " +
                                std::to_string(indexed.size()));
  std::vector<bool> seen(expected, false);
  for (const auto& [i, v] : indexed) {
    const std::size_t p = node_position(freq, i);
    if (seen[p]) throw std::invalid_argument("malformed samples file: duplicate node index");
    seen[p] = true;
    out[p] = v;
  }
  return out;
}

inline void write_report_csv(std::ostream& os, const ExperimentReport& rep) {
  os << "m1,m2,spectral,sup_error,Q,I_ref,rel_error,lebesgue\n";
  for (const auto& row : rep.rows) {
    os << row.freq.m1() << ',' << row.freq.m2() << ',' << to_string(rep.kind) << ','
       << format_double(row.sup_error) << ',' << format_double(row.q) << ','
       << format_double(rep.reference) << ',' << format_double(row.rel_quad_error) << ','
       << (row.lebesgue ? format_double(*row.lebesgue) : std::string()) << '\n';
  }
}

inline json report_json(const ExperimentReport& rep) {
  json rows = json::array();
  for (const auto& row : rep.rows) {
    json r{{"m1", row.freq.m1()},      {"m2", row.freq.m2()},      {"sup_error", row.sup_error},
           {"Q", row.q},                {"rel_error", row.rel_quad_error}};
    r["lebesgue"] = row.lebesgue ? json(*row.lebesgue) : json(nullptr);
    rows.push_back(std::move(r));
  }
  return json{{"spectral", std::string(to_string(rep.kind))},
              {"basis", "real"},
              {"grid", {rep.grid.n_r, rep.grid.n_theta}},
              {"I_ref", rep.reference},
              {"rows", std::move(rows)}};
}

}  // namespace rhodonea::io
