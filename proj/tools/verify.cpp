#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "subdirac/error.hpp"
#include "subdirac/verify.hpp"

namespace {

enum Exit { kOk = 0, kChecksFailed = 1, kUsage = 2, kIo = 3 };

}  // namespace

int main(int argc, char** argv) {
  using namespace subdirac;
  using namespace subdirac::verify;

  CLI::App app{"Verify the subsolution decomposition of the free Dirac equation."};
  std::string suite = "all";
  std::string rep;
  std::string backend;
  double tol = 0.0;
  long trials = 0;
  std::uint64_t seed = 0;
  std::pair<double, double> mass_range;
  std::pair<double, double> momentum_range;
  std::string json_path;
  std::string config_path;
  bool json_stdout = false;

  app.add_option("suite", suite, "clifford|projectors|split|weyl|majorana|covariance|all");
  auto* rep_opt = app.add_option("--rep", rep, "spinor|standard|majorana (default spinor)");
  auto* backend_opt = app.add_option("--backend", backend, "exact|float|both (default both)");
  auto* tol_opt = app.add_option("--tol", tol, "float tolerance (default 1e-10)");
  auto* trials_opt = app.add_option("--trials", trials, "fuzz trials (default 1000)");
  auto* seed_opt = app.add_option("--seed", seed, "64-bit seed");
  auto* mass_opt = app.add_option("--mass-range", mass_range, "fuzz mass range MIN MAX");
  auto* mom_opt = app.add_option("--momentum-range", momentum_range, "fuzz |p| range MIN MAX");
  auto* json_opt = app.add_option("--json", json_path, "also write the JSON report to PATH");
  app.add_option("--config", config_path, "JSON config file; flags override it");
  app.add_flag("--json-stdout", json_stdout, "print the JSON report instead of the table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  RunConfig config;
  std::optional<std::string> out_path;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "error: cannot read " << config_path << '\n';
        return kIo;
      }
      Json j;
      try {
        j = Json::parse(in);
      } catch (const Json::exception& e) {
        throw Error("usage", std::string("config is not valid JSON: ") + e.what());
      }
      config = config_from_json(j);
      if (j.contains("json") && j["json"].is_string()) out_path = j["json"].get<std::string>();
    }
    if (app.get_option("suite")->count() || config_path.empty()) config.suite = suite_from_string(suite);
    if (rep_opt->count()) {
      try {
        config.rep = rep_from_string(rep);
      } catch (const Error& e) {
        throw Error("usage", e.what());
      }
    }
    if (backend_opt->count()) config.backend = backend_choice_from_string(backend);
    if (tol_opt->count()) config.tol = tol;
    if (trials_opt->count()) config.trials = trials;
    if (seed_opt->count()) config.seed = seed;
    if (mass_opt->count()) config.mass_range = mass_range;
    if (mom_opt->count()) config.momentum_range = momentum_range;
    if (json_opt->count()) out_path = json_path;
    config.validate();
  } catch (const Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  Report report;
  try {
    report = run(config);
  } catch (const Error& e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << '\n';
    return kChecksFailed;
  }

  try {
    emit_report(report, json_stdout ? Format::json : Format::human, std::cout, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  return report.ok() ? kOk : kChecksFailed;
}
