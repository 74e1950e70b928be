#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "cgm/errors.hpp"
#include "cgm/verifier.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  out << text;
  out.close();
  if (!out) {
    std::cerr << "cgmlab: cannot write " << path << "\n";
    return kExitFail;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-curvature bundle verifier"};
  app.require_subcommand(1);

  cgm::ScenarioConfig cfg;
  std::string scenario;
  std::optional<double> m, epsilon, tol;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "Run a verification scenario");
  verify->add_option("--scenario", scenario, "Scenario name")
      ->required()
      ->check(CLI::IsMember(cgm::scenario_names()));
  verify->add_option("--c", cfg.c, "Curvature of the base")->required();
  verify->add_option("--m", m, "Weight exponent m (default log2 c)");
  verify->add_option("--r", cfg.r, "Fibre parameter r")->capture_default_str();
  verify->add_option("--epsilon", epsilon, "Berger parameter");
  verify->add_option("--samples", cfg.samples, "Number of samples")->required();
  verify->add_option("--seed", cfg.seed, "RNG seed")->required();
  verify->add_option("--tol", tol, "Threshold for the headline checks");
  verify->add_option("--fd-step", cfg.fd_step, "Finite-difference step")->capture_default_str();
  verify->add_option("--out", verify_out, "Report path (default stdout)");

  std::vector<double> c_list, m_list, r_list;
  std::string table_out;
  double table_step = 1e-3;
  auto* table = app.add_subcommand("table", "Tabulate closed-form and oracle sectionals");
  table->add_option("--c-list", c_list, "Curvatures")->required()->delimiter(',');
  table->add_option("--m-list", m_list, "Weight exponents")->required()->delimiter(',');
  table->add_option("--r-list", r_list, "Fibre parameters")->required()->delimiter(',');
  table->add_option("--fd-step", table_step, "Finite-difference step")->capture_default_str();
  table->add_option("--out", table_out, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      cfg.scenario = cgm::scenario_from_string(scenario);
      cfg.m = m;
      cfg.epsilon = epsilon;
      cfg.tol = tol;
      cgm::validate(cfg);
    } else {
      for (const double c : c_list) {
        if (!(c > 0.0)) throw cgm::InvalidInput("c-list entries must be positive");
      }
      for (const double r : r_list) {
        if (!(r >= 0.0)) throw cgm::InvalidInput("r-list entries must be non-negative");
      }
      if (!(table_step > 0.0 && table_step < 0.1)) {
        throw cgm::InvalidInput("fd-step must lie in (0, 0.1)");
      }
    }
  } catch (const cgm::InvalidInput& e) {
    std::cerr << "cgmlab: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*verify) {
      const cgm::Report report = cgm::run_scenario(cfg);
      if (const int rc = write_output(verify_out, cgm::report_to_json(report))) return rc;
      return report.passed ? 0 : kExitFail;
    }
    std::ostringstream csv;
    cgm::write_table_csv(csv, cgm::curvature_table(c_list, m_list, r_list, table_step));
    return write_output(table_out, csv.str());
  } catch (const std::exception& e) {
    std::cerr << "cgmlab: " << e.what() << "\n";
    return kExitFail;
  }
}
