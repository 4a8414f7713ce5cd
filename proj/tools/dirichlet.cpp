// Command-line front end: norm tables, convergence curves, identity
// verification and weight-array validation.  CSV goes to --out; stderr
// carries diagnostics; stdout stays quiet unless --verbose.
//
// Exit codes: 0 success, 1 validation failure, 2 config parse error,
// 3 numerical error, 4 identity threshold exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dirichlet/approx.hpp"
#include "dirichlet/config.hpp"
#include "dirichlet/superharm.hpp"

namespace {

using nlohmann::json;
using namespace dirichlet;

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  in >> j;
  return j;
}

std::vector<json> list_of(const json& cfg, const std::string& plural,
                          const std::string& singular) {
  std::vector<json> out;
  if (cfg.contains(plural))
    for (const auto& e : cfg.at(plural)) out.push_back(e);
  else if (cfg.contains(singular))
    out.push_back(cfg.at(singular));
  return out;
}

struct OutputFile {
  std::ofstream stream;
  explicit OutputFile(const std::string& path) : stream(path) {
    if (!stream) throw ConfigError("cannot open output file: " + path);
  }
};

std::string resolve_out(const json& cfg, const std::string& flag_out) {
  if (!flag_out.empty()) return flag_out;
  return cfg.value("out", "dirichlet_out.csv");
}

int cmd_norm(const json& cfg, const std::string& flag_out, bool verbose) {
  OutputFile out(resolve_out(cfg, flag_out));
  out.stream << "function,measure_id,dirichlet_mu,dmu_norm_sq\n";
  auto fns = list_of(cfg, "functions", "function");
  auto mus = list_of(cfg, "measures", "measure");
  if (fns.empty() || mus.empty())
    throw ConfigError("norm: need at least one function and one measure");
  for (const auto& fj : fns) {
    CoefficientSeries f = function_from_json(fj);
    for (const auto& mj : mus) {
      DiskMeasure mu = measure_from_json(mj);
      double d = dirichlet_mu(f, mu);
      double n = dmu_norm_sq(f, mu);
      out.stream << function_label(fj) << ',' << mu.id() << ',' << fmt17(d)
                 << ',' << fmt17(n) << '\n';
      if (verbose)
        std::cout << function_label(fj) << " x " << mu.id()
                  << ": D_mu=" << fmt17(d) << "\n";
    }
  }
  return 0;
}

int cmd_converge(const json& cfg, const std::string& flag_out,
                 const std::vector<int>& flag_nlist, int counterexample_J,
                 bool verbose) {
  OutputFile out(resolve_out(cfg, flag_out));
  out.stream << "n,err_sq,norm_sq,bound_sq,array_name,measure_id\n";

  if (counterexample_J > 0) {
    // Lacunary function at the boundary atom delta_1: Taylor truncation
    // stalls at err_sq >= 1 along n = 2^j - 1, Fejer decays.
    auto records = counterexample_run(counterexample_J);
    for (const auto& r : records) {
      out.stream << r.n << ',' << fmt17(r.taylor_err_sq) << ','
                 << fmt17(r.taylor_err_sq) << ',' << fmt17(r.taylor_closed_form)
                 << ",truncation,delta_1_counterexample\n";
      out.stream << r.n << ',' << fmt17(r.fejer_err_sq) << ','
                 << fmt17(r.fejer_err_sq) << ',' << fmt17(std::nan(""))
                 << ",fejer,delta_1_counterexample\n";
    }
    return 0;
  }

  auto fns = list_of(cfg, "functions", "function");
  auto mus = list_of(cfg, "measures", "measure");
  if (fns.empty() || mus.empty())
    throw ConfigError("converge: need a function and a measure");
  std::vector<int> n_list = flag_nlist;
  if (n_list.empty() && cfg.contains("n_list"))
    n_list = cfg.at("n_list").get<std::vector<int>>();
  if (n_list.empty()) throw ConfigError("converge: empty n_list");

  std::vector<json> arrays;
  if (cfg.contains("arrays"))
    for (const auto& a : cfg.at("arrays")) arrays.push_back(a);
  else
    arrays.push_back(json("fejer"));

  for (const auto& fj : fns) {
    CoefficientSeries f = function_from_json(fj);
    for (const auto& mj : mus) {
      DiskMeasure mu = measure_from_json(mj);
      for (const auto& aj : arrays) {
        WeightArray arr = array_from_json(aj);
        auto records = convergence_run(f, mu, arr, n_list);
        for (const auto& r : records) {
          out.stream << r.n << ',' << fmt17(r.err_sq) << ',' << fmt17(r.norm_sq)
                     << ',' << fmt17(r.bound_sq) << ',' << arr.name << ','
                     << mu.id() << '\n';
          if (verbose)
            std::cout << arr.name << " n=" << r.n
                      << " err_sq=" << fmt17(r.err_sq) << "\n";
        }
      }
    }
  }
  return 0;
}

int cmd_verify_identity(const json& cfg, const std::string& flag_out,
                        int nodes_r, int nodes_theta, double threshold,
                        bool verbose) {
  OutputFile out(resolve_out(cfg, flag_out));
  auto fns = list_of(cfg, "functions", "function");
  if (fns.empty()) throw ConfigError("verify-identity: need a function");

  if (cfg.contains("alphas")) {
    // Power-weight mode: two-sided comparison against sum k^alpha |a_k|^2.
    out.stream << "function,alpha,integral,coeff_sum,ratio\n";
    bool ok = true;
    for (const auto& fj : fns) {
      CoefficientSeries f = function_from_json(fj);
      for (double alpha : cfg.at("alphas").get<std::vector<double>>()) {
        auto rep = power_weight_comparison(f, alpha, std::max(nodes_r, 512),
                                           nodes_theta);
        out.stream << function_label(fj) << ',' << fmt17(alpha) << ','
                   << fmt17(rep.integral) << ',' << fmt17(rep.coeff_sum) << ','
                   << fmt17(rep.ratio) << '\n';
        if (rep.ratio < 0.25 || rep.ratio > 4.0) ok = false;
      }
    }
    return ok ? 0 : 4;
  }

  auto mus = list_of(cfg, "measures", "measure");
  if (mus.empty()) throw ConfigError("verify-identity: need a measure");
  out.stream
      << "function,measure_id,lhs,rhs,abs_err,rel_err,nodes_r,nodes_theta,"
         "warning\n";
  bool ok = true;
  for (const auto& fj : fns) {
    CoefficientSeries f = function_from_json(fj);
    for (const auto& mj : mus) {
      DiskMeasure mu = measure_from_json(mj);
      IdentityReport rep = identity_check(f, mu, nodes_r, nodes_theta);
      out.stream << function_label(fj) << ',' << mu.id() << ','
                 << fmt17(rep.lhs) << ',' << fmt17(rep.rhs) << ','
                 << fmt17(rep.abs_err) << ',' << fmt17(rep.rel_err) << ','
                 << rep.nodes_r << ',' << rep.nodes_theta << ','
                 << (rep.warning ? 1 : 0) << '\n';
      if (verbose)
        std::cout << mu.id() << ": rel_err=" << fmt17(rep.rel_err) << "\n";
      if (!(rep.rel_err <= threshold)) ok = false;
    }
  }
  return ok ? 0 : 4;
}

int cmd_validate_array(const json& cfg, int n_max, double tol) {
  std::vector<json> arrays;
  if (cfg.contains("arrays"))
    for (const auto& a : cfg.at("arrays")) arrays.push_back(a);
  else
    throw ConfigError("validate-array: config needs \"arrays\"");
  bool all_ok = true;
  for (const auto& aj : arrays) {
    WeightArray arr = array_from_json(aj);
    ValidationReport rep = validate(arr, n_max, tol);
    auto line = [&](const char* cond, const ConditionResult& c) {
      std::cout << arr.name << ' ' << cond << ' '
                << (c.pass ? "pass" : "FAIL");
      if (!c.pass)
        std::cout << " witness n=" << c.witness_n << " k=" << c.witness_k
                  << " value=" << fmt17(c.worst);
      std::cout << '\n';
    };
    line("triangular", rep.triangular);
    line("limit_one", rep.limit_one);
    line("uniform_bound", rep.uniform_bound);
    line("difference", rep.difference);
    if (!rep.all_pass()) all_ok = false;
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted Dirichlet space numerics"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  std::vector<int> n_list;
  int nodes_r = 64, nodes_theta = 256, counterexample_J = 0, n_max = 512;
  // default tol covers the slowest admissible drift log2(n_max)/n_max at the
  // default n_max = 512
  double threshold = 1e-5, tol = 2e-2;
  bool verbose = false;
  app.add_flag("--verbose", verbose, "progress on stdout");

  auto* norm = app.add_subcommand("norm", "D_mu and space norms");
  norm->add_option("--config", config_path)->required();
  norm->add_option("--out", out_path);

  auto* conv = app.add_subcommand("converge", "error curves ||f-p_n||");
  conv->add_option("--config", config_path)->required();
  conv->add_option("--out", out_path);
  conv->add_option("--n-list", n_list);
  conv->add_option("--counterexample", counterexample_J,
                   "run the delta_1 Taylor-divergence experiment with this J");

  auto* ver = app.add_subcommand("verify-identity",
                                 "area integral vs D_mu; power-weight sweep");
  ver->add_option("--config", config_path)->required();
  ver->add_option("--out", out_path);
  ver->add_option("--nodes-r", nodes_r);
  ver->add_option("--nodes-theta", nodes_theta);
  ver->add_option("--threshold", threshold);

  auto* val = app.add_subcommand("validate-array", "check array conditions");
  val->add_option("--config", config_path)->required();
  val->add_option("--n-max", n_max);
  val->add_option("--tol", tol);

  CLI11_PARSE(app, argc, argv);

  try {
    nlohmann::json cfg = load_config(config_path);
    // flags override config fields
    if (out_path.empty() && cfg.contains("out"))
      out_path = cfg.at("out").get<std::string>();
    if (nodes_r == 64 && cfg.contains("nodes_r"))
      nodes_r = cfg.at("nodes_r").get<int>();
    if (nodes_theta == 256 && cfg.contains("nodes_theta"))
      nodes_theta = cfg.at("nodes_theta").get<int>();
    if (threshold == 1e-5 && cfg.contains("threshold"))
      threshold = cfg.at("threshold").get<double>();

    if (*norm) return cmd_norm(cfg, out_path, verbose);
    if (*conv)
      return cmd_converge(cfg, out_path, n_list, counterexample_J, verbose);
    if (*ver)
      return cmd_verify_identity(cfg, out_path, nodes_r, nodes_theta,
                                 threshold, verbose);
    if (*val) return cmd_validate_array(cfg, n_max, tol);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
