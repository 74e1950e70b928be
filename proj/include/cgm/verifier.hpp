#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cgm {

enum class Scenario {
  SphereIsometry,
  BergerIsometry,
  HyperbolicImmersion,
  CurvatureClosedVsOracle,
  ConstantCurvatureT1,
  PositivitySample,
  OracleSanity,
};

const char* to_string(Scenario s);
// Throws InvalidInput on an unknown name.
Scenario scenario_from_string(const std::string& name);
const std::vector<std::string>& scenario_names();

struct ScenarioConfig {
  Scenario scenario = Scenario::SphereIsometry;
  double c = 4.0;
  std::optional<double> m;  // log2(c), or log2(eps^2) + 2 for berger-isometry
  double r = 0.0;
  std::optional<double> epsilon;
  int samples = 100;
  std::uint64_t seed = 1;
  // Overrides the threshold of the scenario's headline checks: the
  // closed-form Gram checks for isometry scenarios and the oracle
  // comparisons for curvature scenarios.
  std::optional<double> tol;
  double fd_step = 1e-3;

  double effective_m() const;
};

// Throws InvalidInput when the configuration is unusable.
void validate(const ScenarioConfig& cfg);

struct CheckResult {
  std::string name;
  double max_abs_error = 0.0;
  double threshold = 0.0;
  bool passed = false;
  int samples_used = 0;
};

CheckResult make_check(std::string name, double max_abs_error, double threshold, int samples);

struct Report {
  ScenarioConfig config;
  std::vector<CheckResult> checks;
  // Observed quantities echoed alongside the parameters.
  std::vector<std::pair<std::string, double>> observations;
  bool passed = false;
  double wall_ms = 0.0;
};

Report run_scenario(const ScenarioConfig& cfg);

// Pretty-printed JSON; with include_wall_time false the wall_ms field is 0 so
// that repeated runs compare byte for byte.
std::string report_to_json(const Report& report, bool include_wall_time = true);

struct TableRow {
  double c;
  double m;
  double r;
  std::string plane;
  double closed_form;
  double oracle;
  double delta;  // oracle - closed_form
};

// Closed-form against oracle sectional curvatures of the three lift planes
// over the grid, evaluated at a fixed unit point of the tangent bundle chart.
std::vector<TableRow> curvature_table(const std::vector<double>& c_list,
                                      const std::vector<double>& m_list,
                                      const std::vector<double>& r_list, double fd_step = 1e-3);

void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows);

}  // namespace cgm
