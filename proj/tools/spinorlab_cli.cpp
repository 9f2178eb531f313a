// Command-line driver: verification suites, parameter sweeps, dispersion scans.
//
// Exit codes: 0 all checks pass, 1 at least one check fails, 2 usage or
// configuration error.

#include "spinorlab/report.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using spinorlab::ReportRecord;

struct CommonFlags {
  std::optional<double> a, b, alpha1, alpha2, beta1, beta2, m, tol, p_over_m_max;
  std::optional<int> count;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::string out;
  std::string config;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--a", f.a, "first-order coefficient a");
  cmd->add_option("--b", f.b, "antilinear coefficient b");
  cmd->add_option("--alpha1", f.alpha1, "phase alpha1");
  cmd->add_option("--alpha2", f.alpha2, "phase alpha2");
  cmd->add_option("--beta1", f.beta1, "gamma5 coefficient beta1");
  cmd->add_option("--beta2", f.beta2, "scalar coefficient beta2");
  cmd->add_option("--m", f.m, "mass (mass units)");
  cmd->add_option("--tol", f.tol, "pass/fail tolerance");
  cmd->add_option("--seed", f.seed, "momentum sampling seed");
  cmd->add_option("--count", f.count, "momentum sample count");
  cmd->add_option("--format", f.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", f.out, "output path (default stdout)");
  cmd->add_option("--config", f.config, "JSON config file");
}

nlohmann::json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

nlohmann::json merged_config(const CommonFlags& f) {
  nlohmann::json j = f.config.empty() ? nlohmann::json::object() : load_config(f.config);
  auto set = [&](const char* key, const auto& opt) {
    if (opt.has_value()) j[key] = *opt;
  };
  set("a", f.a);
  set("b", f.b);
  set("alpha1", f.alpha1);
  set("alpha2", f.alpha2);
  set("beta1", f.beta1);
  set("beta2", f.beta2);
  set("m", f.m);
  set("tol", f.tol);
  set("seed", f.seed);
  set("count", f.count);
  set("p_over_m_max", f.p_over_m_max);
  return j;
}

int emit(const std::vector<ReportRecord>& records, const std::string& format,
         const std::string& out) {
  if (out.empty()) {
    spinorlab::write_records(std::cout, records, format);
  } else {
    std::ofstream os(out);
    if (!os) {
      std::cerr << "error: cannot write output file: " << out << "\n";
      return 2;
    }
    spinorlab::write_records(os, records, format);
    if (!os.good()) {
      std::cerr << "error: failed while writing: " << out << "\n";
      return 2;
    }
  }
  return spinorlab::any_failed(records) ? 1 : 0;
}

int cmd_verify(const CommonFlags& f) {
  const spinorlab::RunParams rp = spinorlab::run_params_from_json(merged_config(f));
  return emit(spinorlab::run_verify(rp), f.format, f.out);
}

int cmd_sweep(const CommonFlags& f) {
  nlohmann::json j = merged_config(f);
  if (!f.format.empty()) j["format"] = f.format;
  if (!f.out.empty()) j["out"] = f.out;
  const spinorlab::SweepConfig cfg = spinorlab::sweep_config_from_json(j);
  return emit(spinorlab::run_sweep(cfg), cfg.format, cfg.out);
}

int cmd_dispersion(const CommonFlags& f) {
  const nlohmann::json j = merged_config(f);
  const bool generalized = j.contains("beta1") || j.contains("beta2");
  spinorlab::RunParams rp = spinorlab::run_params_from_json(j);
  if (!generalized) rp.beta1 = rp.beta2 = 0.0;
  std::vector<ReportRecord> records;

  auto describe = [&](const char* check, const spinorlab::DispersionResult& d,
                      nlohmann::json params) {
    params["p2_roots"] = d.roots_p2;
    params["multiplicities"] = d.multiplicities;
    nlohmann::json masses = nlohmann::json::array();
    for (double r : d.roots_p2) {
      if (r >= 0.0)
        masses.push_back(std::sqrt(r));
      else
        masses.push_back(nullptr);
    }
    params["masses"] = masses;
    records.push_back(ReportRecord{check, params, 0.0,
                                   d.massless_degenerate ? "degenerate" : "pass"});
  };

  describe("dispersion-first-order",
           spinorlab::dispersion_roots(spinorlab::EquationParams{rp.a, rp.b, rp.m}),
           {{"a", rp.a}, {"b", rp.b}, {"m", rp.m}});
  if (rp.beta1 != 0.0 || rp.beta2 != 0.0) {
    describe("dispersion-generalized",
             spinorlab::dispersion_roots(spinorlab::GeneralizedParams{
                 rp.a, rp.b, rp.alpha1, rp.alpha2, rp.beta1, rp.beta2, rp.m}),
             {{"a", rp.a},
              {"alpha1", rp.alpha1},
              {"alpha2", rp.alpha2},
              {"beta1", rp.beta1},
              {"beta2", rp.beta2},
              {"m", rp.m}});
  }
  return emit(records, f.format, f.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinor representation workbench"};
  app.require_subcommand(1);

  CommonFlags verify_flags, sweep_flags, dispersion_flags;
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  add_common(verify, verify_flags);
  CLI::App* sweep = app.add_subcommand("sweep", "grid sweep of compatibility and dispersion");
  add_common(sweep, sweep_flags);
  CLI::App* dispersion = app.add_subcommand("dispersion", "dispersion spectrum for given parameters");
  add_common(dispersion, dispersion_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_flags);
    if (sweep->parsed()) return cmd_sweep(sweep_flags);
    if (dispersion->parsed()) return cmd_dispersion(dispersion_flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
