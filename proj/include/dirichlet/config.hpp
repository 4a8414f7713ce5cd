#pragma once

// Experiment configuration: a single JSON document naming the function(s),
// measure(s), weight arrays, node counts and output path.  CLI flags
// override config fields.  See README for the schema.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kernels.hpp"
#include "measures.hpp"
#include "series.hpp"

namespace dirichlet {

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline CoefficientSeries function_from_json(const nlohmann::json& j) {
  if (j.contains("coeffs")) return series_from_json(j.at("coeffs"));
  if (j.contains("coeff_file")) {
    std::ifstream in(j.at("coeff_file").get<std::string>());
    if (!in) throw ConfigError("cannot open coefficient file");
    nlohmann::json c;
    in >> c;
    return series_from_json(c);
  }
  if (!j.contains("family"))
    throw ConfigError("function: need family, coeffs, or coeff_file");
  std::vector<double> params;
  if (j.contains("params")) params = j.at("params").get<std::vector<double>>();
  auto N = j.value("N", 64);
  if (N < 0) throw ConfigError("function: N must be >= 0");
  return make_family(j.at("family").get<std::string>(), params,
                     static_cast<std::size_t>(N));
}

inline std::string function_label(const nlohmann::json& j) {
  if (j.contains("family")) {
    std::string s = j.at("family").get<std::string>();
    if (j.contains("params"))
      for (double p : j.at("params").get<std::vector<double>>())
        s += "_" + std::to_string(p);
    return s;
  }
  if (j.contains("coeff_file")) return j.at("coeff_file").get<std::string>();
  return "coeffs";
}

inline DiskMeasure measure_from_json(const nlohmann::json& j) {
  std::string type = j.at("type").get<std::string>();
  std::string id = j.value("id", type);
  if (type == "atomic") {
    std::vector<Atom> atoms;
    for (const auto& a : j.at("atoms")) {
      atoms.push_back(Atom{
          DiskPoint(cplx(a.at("re").get<double>(), a.at("im").get<double>())),
          a.at("mass").get<double>()});
    }
    return DiskMeasure::atomic(std::move(atoms), id);
  }
  if (type == "circle") {
    int nodes = j.value("nodes", 256);
    if (j.contains("density_table")) {
      auto table = j.at("density_table").get<std::vector<double>>();
      if (static_cast<int>(table.size()) != nodes)
        throw ConfigError("circle measure: density_table size != nodes");
      auto lookup = [table, nodes](double th) {
        int k = static_cast<int>(std::lround(th * nodes / (2.0 * M_PI)));
        return table[static_cast<std::size_t>(((k % nodes) + nodes) % nodes)];
      };
      return DiskMeasure(CircleDensityMeasure{lookup, nodes}, id);
    }
    std::string density = j.value("density", "uniform");
    if (density != "uniform")
      throw ConfigError("circle measure: unknown density " + density);
    return DiskMeasure(
        CircleDensityMeasure{[](double) { return 1.0 / (2.0 * M_PI); }, nodes},
        id);
  }
  if (type == "disk") {
    int nr = j.value("radial_nodes", 64);
    int nth = j.value("angular_nodes", 256);
    std::string density = j.value("density", "uniform");
    if (density != "uniform")
      throw ConfigError("disk measure: unknown density " + density);
    return DiskMeasure(
        DiskDensityMeasure{[](double, double) { return 1.0 / M_PI; }, nr, nth},
        id);
  }
  throw ConfigError("unknown measure type: " + type);
}

inline WeightArray array_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    std::string name = j.get<std::string>();
    if (name == "fejer") return fejer();
    if (name == "truncation") return taylor_truncation();
    if (name == "vallee_poussin") return vallee_poussin();
    throw ConfigError("unknown weight array: " + name);
  }
  if (j.is_object() && j.value("type", "") == "table") {
    auto rows = j.at("rows").get<std::vector<std::vector<double>>>();
    WeightArray a;
    a.w = [rows](int n, int k) -> cplx {
      if (n >= 0 && static_cast<std::size_t>(n) < rows.size()) {
        const auto& row = rows[static_cast<std::size_t>(n)];
        if (k >= 0 && static_cast<std::size_t>(k) < row.size())
          return row[static_cast<std::size_t>(k)];
        return 0.0;
      }
      return k <= n ? 1.0 : 0.0;  // beyond the table: all-ones limit
    };
    double m = 1.0;
    for (const auto& row : rows)
      for (double v : row) m = std::max(m, std::abs(v));
    a.M = j.value("M", m);
    if (j.contains("L")) a.L = j.at("L").get<double>();
    a.name = j.value("name", "table");
    return a;
  }
  throw ConfigError("weight array: expected name or {type:\"table\"}");
}

// Full decimal precision so downstream plotting and regression diffs are
// exact across runs.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace dirichlet
