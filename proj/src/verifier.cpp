#include "cgm/verifier.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "cgm/charts.hpp"
#include "cgm/curvature.hpp"
#include "cgm/errors.hpp"
#include "cgm/lie_bridge.hpp"
#include "cgm/rng.hpp"
#include "json.hpp"

namespace cgm {

namespace {

struct NamedScenario {
  Scenario scenario;
  const char* name;
};

constexpr NamedScenario kScenarios[] = {
    {Scenario::SphereIsometry, "sphere-isometry"},
    {Scenario::BergerIsometry, "berger-isometry"},
    {Scenario::HyperbolicImmersion, "hyperbolic-immersion"},
    {Scenario::CurvatureClosedVsOracle, "curvature-closed-vs-oracle"},
    {Scenario::ConstantCurvatureT1, "constant-curvature-T1"},
    {Scenario::PositivitySample, "positivity-sample"},
    {Scenario::OracleSanity, "oracle-sanity"},
};

constexpr double kNumericGramTol = 1e-6;
constexpr double kClosedGramTol = 1e-10;
constexpr double kCurvatureTol = 1e-4;
constexpr double kBaseCurvatureTol = 1e-5;
constexpr double kFlatTol = 1e-8;
constexpr double kBianchiTol = 1e-6;
constexpr double kPlaneInvarianceTol = 1e-8;
constexpr double kGeodesicTol = 1e-5;
constexpr double kIdentityTol = 1e-12;

using Clock = std::chrono::steady_clock;

// Running maximum of an error over samples.
struct MaxError {
  double value = 0.0;
  int samples = 0;
  void add(double e) {
    // NaN propagates as a failure.
    if (std::isnan(e) || e > value) value = e;
    ++samples;
  }
};

FDConfig fd_config(const ScenarioConfig& cfg) { return {cfg.fd_step, true}; }
DiffRule inner_rule(const ScenarioConfig& cfg) { return {cfg.fd_step, true}; }

Eigen::Matrix3d closed_gram(const MetricParams& params, const AmbientVector& p,
                            const FramePoint& fp) {
  std::array<BundleTangent, 3> z = {dF_closed(p, params.c, fp.frame[0]),
                                    dF_closed(p, params.c, fp.frame[1]),
                                    dF_closed(p, params.c, fp.frame[2])};
  Eigen::Matrix3d g;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) g(i, j) = metric_h(params, z[i], z[j]);
  }
  return g;
}

Eigen::Matrix3d numeric_gram(const MetricParams& params, const ModelSpace& source,
                             const AmbientVector& p, const FramePoint& fp, const DiffRule& rule) {
  const double c = params.c;
  return pullback_fd([c](const AmbientVector& q) { return covering_F(q, c); }, source, p,
                     {fp.frame[0], fp.frame[1], fp.frame[2]}, params, rule);
}

// Gram matrix of the frame X1, X2, X3 of S^3(c/4) or H^3_1(c/4) under
// h_{m,r}, closed form and numeric, against a target matrix.
void isometry_checks(const ScenarioConfig& cfg, Report& report, const MetricParams& params,
                     const ModelSpace& source,
                     const std::function<Eigen::Matrix3d(const AmbientVector&)>& target,
                     const std::string& suffix) {
  Rng rng(cfg.seed);
  MaxError closed;
  MaxError numeric;
  for (int s = 0; s < cfg.samples; ++s) {
    const AmbientVector p = sample_point(source, rng);
    const FramePoint fp = frame_fields(source, p);
    const Eigen::Matrix3d t = target(p);
    closed.add((closed_gram(params, p, fp) - t).cwiseAbs().maxCoeff());
    numeric.add((numeric_gram(params, source, p, fp, DiffRule{}) - t).cwiseAbs().maxCoeff());
  }
  report.checks.push_back(make_check("gram_closed_form" + suffix, closed.value,
                                     cfg.tol.value_or(kClosedGramTol), closed.samples));
  report.checks.push_back(
      make_check("gram_numeric" + suffix, numeric.value, kNumericGramTol, numeric.samples));
}

void run_sphere_isometry(const ScenarioConfig& cfg, Report& report) {
  const MetricParams params(cfg.effective_m(), cfg.r, cfg.c);
  const ModelSpace source(ModelSpace::Kind::Sphere3, cfg.c / 4.0);
  isometry_checks(cfg, report, params, source,
                  [](const AmbientVector&) { return Eigen::Matrix3d::Identity().eval(); }, "");
}

void run_hyperbolic_immersion(const ScenarioConfig& cfg, Report& report) {
  const MetricParams params(cfg.effective_m(), cfg.r, cfg.c, MetricParams::FiberSign::Indefinite);
  const ModelSpace source(ModelSpace::Kind::AntiDeSitter3, cfg.c / 4.0);
  const Eigen::Matrix3d target = Eigen::Vector3d(1.0, 1.0, -1.0).asDiagonal();
  isometry_checks(cfg, report, params, source, [&](const AmbientVector&) { return target; }, "");
}

Coords random_hopf_chart_point(Rng& rng) {
  Coords u(3);
  u << rng.uniform(0.3, 1.2), rng.uniform(-2.5, 2.5), rng.uniform(-2.5, 2.5);
  return u;
}

// Coordinates in the S^3 chart of an ambient tangent vector.
Coords hopf_chart_coordinates(const Coords& u, const AmbientVector& v) {
  const auto J = hopf_chart_jacobian(u);
  Eigen::Matrix3d gram;
  Eigen::Vector3d rhs;
  for (int i = 0; i < 3; ++i) {
    rhs[i] = ambient_dot(J[i], v);
    for (int j = 0; j < 3; ++j) gram(i, j) = ambient_dot(J[i], J[j]);
  }
  return gram.lu().solve(rhs);
}

void run_berger_isometry(const ScenarioConfig& cfg, Report& report) {
  const double eps = *cfg.epsilon;
  const MetricParams params(cfg.effective_m(), cfg.r, cfg.c);
  const ModelSpace source(ModelSpace::Kind::Sphere3, 1.0);
  isometry_checks(cfg, report, params, source,
                  [&](const AmbientVector& p) {
                    const FramePoint fp = frame_fields(source, p);
                    Eigen::Matrix3d g;
                    for (int i = 0; i < 3; ++i) {
                      for (int j = 0; j < 3; ++j) {
                        g(i, j) = berger_metric(eps, p, fp.frame[i], fp.frame[j]);
                      }
                    }
                    return g;
                  },
                  "_vs_berger");
  const auto [k_horizontal, k_mixed] = berger_sectional(eps);
  const MetricField chart = berger_chart(eps);
  Rng rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  MaxError err;
  for (int s = 0; s < cfg.samples; ++s) {
    const Coords u = random_hopf_chart_point(rng);
    const FramePoint fp = frame_fields(source, hopf_chart_point(u));
    std::array<Coords, 3> x;
    for (int i = 0; i < 3; ++i) x[i] = hopf_chart_coordinates(u, fp.frame[i]);
    const Riemann R = riemann_fd(chart, u, fd_config(cfg));
    const Eigen::MatrixXd g = metric_components(chart, u, fd_config(cfg));
    const auto sec = [&](const Coords& a, const Coords& b) {
      const double area = a.dot(g * a) * b.dot(g * b) - std::pow(a.dot(g * b), 2);
      return curvature_form(R, g, a, b, b, a) / area;
    };
    err.add(std::max({std::abs(sec(x[0], x[1]) - k_horizontal),
                      std::abs(sec(x[0], x[2]) - k_mixed), std::abs(sec(x[1], x[2]) - k_mixed)}));
  }
  report.checks.push_back(make_check("berger_sectional_vs_oracle", err.value,
                                     cfg.tol.value_or(kCurvatureTol), err.samples));
}

Coords random_base_coords(const ModelSpace& space, Rng& rng) {
  const double a = space.is_spherical() ? 1.2 : 0.45;
  Coords u(2);
  u << rng.uniform(-a, a), rng.uniform(-a, a);
  return u;
}

struct LiftPlanes {
  Coords eh, fh, fv;
};

// e^h, f^h, f^v at a unit point, in tangent or unit bundle chart coordinates.
LiftPlanes lift_plane_coords(const ModelSpace& space, const Coords& base, double theta,
                             bool unit_bundle, const DiffRule& inner) {
  Coords u(unit_bundle ? 3 : 4);
  if (unit_bundle) {
    u << base, theta;
  } else {
    u << base, std::cos(theta), std::sin(theta);
  }
  const BundlePoint bp =
      unit_bundle ? unit_bundle_point(space, u) : tangent_bundle_point(space, u);
  const auto E = adapted_frame(space, base);
  const AmbientVector f = -std::sin(theta) * E[0] + std::cos(theta) * E[1];
  return {tangent_coordinates(space, u, unit_bundle, horizontal_lift(bp, bp.e()), inner),
          tangent_coordinates(space, u, unit_bundle, horizontal_lift(bp, f), inner),
          tangent_coordinates(space, u, unit_bundle, vertical_lift(bp, f), inner)};
}

struct PlaneValues {
  double hh, hv_e, hv_f;
};

PlaneValues oracle_lift_sectionals(const MetricParams& params, const Coords& base, double theta,
                                   bool unit_bundle, const FDConfig& fd, const DiffRule& inner) {
  const ModelSpace space = bundle_base(params);
  const MetricField chart =
      unit_bundle ? unit_bundle_chart(params, inner) : tangent_bundle_chart(params, inner);
  Coords u(unit_bundle ? 3 : 4);
  if (unit_bundle) {
    u << base, theta;
  } else {
    u << base, std::cos(theta), std::sin(theta);
  }
  const LiftPlanes planes = lift_plane_coords(space, base, theta, unit_bundle, inner);
  const Riemann R = riemann_fd(chart, u, fd);
  const Eigen::MatrixXd g = metric_components(chart, u, fd);
  const auto sec = [&](const Coords& a, const Coords& b) {
    const double area = a.dot(g * a) * b.dot(g * b) - std::pow(a.dot(g * b), 2);
    if (!(std::abs(area) > 1e-8)) throw DomainError("degenerate lift plane");
    return curvature_form(R, g, a, b, b, a) / area;
  };
  return {sec(planes.eh, planes.fh), sec(planes.eh, planes.fv), sec(planes.fh, planes.fv)};
}

void run_curvature_closed_vs_oracle(const ScenarioConfig& cfg, Report& report) {
  const MetricParams params(cfg.effective_m(), cfg.r, cfg.c);
  const ModelSpace space = bundle_base(params);
  const double tol = cfg.tol.value_or(kCurvatureTol);
  const PlaneValues closed{sectional_T1_closed(params, PlaneSpec::HH),
                           sectional_T1_closed(params, PlaneSpec::HV_e),
                           sectional_T1_closed(params, PlaneSpec::HV_f)};
  for (const bool unit_bundle : {false, true}) {
    Rng rng(cfg.seed + (unit_bundle ? 1 : 0));
    MaxError hh, hv_e, hv_f;
    for (int s = 0; s < cfg.samples; ++s) {
      const Coords base = random_base_coords(space, rng);
      const double theta = rng.uniform(-3.0, 3.0);
      const PlaneValues k =
          oracle_lift_sectionals(params, base, theta, unit_bundle, fd_config(cfg), inner_rule(cfg));
      hh.add(std::abs(k.hh - closed.hh));
      hv_e.add(std::abs(k.hv_e - closed.hv_e));
      hv_f.add(std::abs(k.hv_f - closed.hv_f));
    }
    const std::string prefix = unit_bundle ? "unit_bundle_" : "tangent_bundle_";
    report.checks.push_back(make_check(prefix + "HH", hh.value, tol, hh.samples));
    report.checks.push_back(make_check(prefix + "HV_e", hv_e.value, tol, hv_e.samples));
    report.checks.push_back(make_check(prefix + "HV_f", hv_f.value, tol, hv_f.samples));
  }
  report.checks.push_back(make_check("HH_plus_3HV_equals_c",
                                     std::abs(closed.hh + 3.0 * closed.hv_e - cfg.c),
                                     kIdentityTol, 1));
}

Coords random_vector(int n, Rng& rng) {
  Coords v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.normal();
  return v;
}

// Sectional curvature with a degenerate-plane guard; nullopt on degeneracy.
std::optional<double> plane_sectional(const Riemann& R, const Eigen::MatrixXd& g,
                                      const Coords& v, const Coords& w) {
  const double area = v.dot(g * v) * w.dot(g * w) - std::pow(v.dot(g * w), 2);
  if (!(std::abs(area) > 1e-8)) return std::nullopt;
  return curvature_form(R, g, v, w, w, v) / area;
}

void run_constant_curvature_t1(const ScenarioConfig& cfg, Report& report) {
  const MetricParams params(cfg.effective_m(), cfg.r, cfg.c);
  const ModelSpace space = bundle_base(params);
  const MetricField chart = unit_bundle_chart(params, inner_rule(cfg));
  Rng rng(cfg.seed);
  MaxError err;
  while (err.samples < cfg.samples) {
    Coords u(3);
    u << random_base_coords(space, rng), rng.uniform(-3.0, 3.0);
    const Riemann R = riemann_fd(chart, u, fd_config(cfg));
    const Eigen::MatrixXd g = metric_components(chart, u, fd_config(cfg));
    const auto k = plane_sectional(R, g, random_vector(3, rng), random_vector(3, rng));
    if (!k) continue;
    err.add(std::abs(*k - cfg.c / 4.0));
  }
  report.checks.push_back(make_check("sectional_equals_c_over_4", err.value,
                                     cfg.tol.value_or(kCurvatureTol), err.samples));
}

double scalar_curvature(const Riemann& R, const Eigen::MatrixXd& g) {
  const int n = R.dim();
  const Eigen::MatrixXd ginv = g.inverse();
  double s = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      double ric = 0.0;
      for (int i = 0; i < n; ++i) ric += R(i, i, j, k);
      s += ginv(j, k) * ric;
    }
  }
  return s;
}

void run_positivity_sample(const ScenarioConfig& cfg, Report& report) {
  const MetricParams params(cfg.effective_m(), cfg.r, cfg.c);
  const ModelSpace space = bundle_base(params);
  const MetricField chart = tangent_bundle_chart(params, inner_rule(cfg));
  const PositivityThresholds th = positivity_thresholds(params.m, params.r);
  Rng rng(cfg.seed);
  double min_sec = INFINITY;
  double min_scal = INFINITY;
  int used = 0;
  while (used < cfg.samples) {
    Coords u(4);
    u << random_base_coords(space, rng), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0);
    const Riemann R = riemann_fd(chart, u, fd_config(cfg));
    const Eigen::MatrixXd g = metric_components(chart, u, fd_config(cfg));
    const auto k = plane_sectional(R, g, random_vector(4, rng), random_vector(4, rng));
    if (!k) continue;
    min_sec = std::min(min_sec, *k);
    min_scal = std::min(min_scal, scalar_curvature(R, g));
    ++used;
  }
  report.observations.emplace_back("min_sectional", min_sec);
  report.observations.emplace_back("min_scalar", min_scal);
  // Sampling can only confirm positivity where the threshold predicts it.
  if (th.sec_threshold && cfg.c <= *th.sec_threshold) {
    report.checks.push_back(
        make_check("sectional_positive_below_threshold", std::max(0.0, -min_sec), 0.0, used));
  } else {
    report.checks.push_back(make_check("sectional_threshold_not_met", 0.0, 0.0, 0));
  }
  if (th.scal_threshold && cfg.c <= *th.scal_threshold) {
    report.checks.push_back(
        make_check("scalar_positive_below_threshold", std::max(0.0, -min_scal), 0.0, used));
  } else {
    report.checks.push_back(make_check("scalar_threshold_not_met", 0.0, 0.0, 0));
  }
}

// Christoffel symbols of (4 / (c (1 + |u|^2)^2)) delta on the stereographic chart.
Christoffel round_sphere_christoffel(const Coords& u) {
  const double d = 1.0 + u.squaredNorm();
  const Eigen::Vector2d phi = -2.0 * u / d;
  Christoffel gamma(2);
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        gamma(k, i, j) = (k == i ? phi[j] : 0.0) + (k == j ? phi[i] : 0.0) -
                         (i == j ? phi[k] : 0.0);
      }
    }
  }
  return gamma;
}

void run_oracle_sanity(const ScenarioConfig& cfg, Report& report) {
  const FDConfig fd = fd_config(cfg);
  const double tol = cfg.tol.value_or(kBaseCurvatureTol);
  Rng rng(cfg.seed);
  const ModelSpace sphere(ModelSpace::Kind::Sphere2, cfg.c);
  const ModelSpace hyper(ModelSpace::Kind::HyperbolicPlane, cfg.c);
  for (const ModelSpace& space : {sphere, hyper}) {
    const MetricField chart = stereographic_chart(space);
    MaxError err;
    while (err.samples < cfg.samples) {
      const Coords u = random_base_coords(space, rng);
      const Coords v = random_vector(2, rng);
      const Coords w = random_vector(2, rng);
      try {
        err.add(std::abs(sectional_fd(chart, u, v, w, fd) - space.curvature_sign() * cfg.c));
      } catch (const DomainError&) {
        continue;
      }
    }
    report.checks.push_back(make_check(
        space.is_spherical() ? "sphere_sectional" : "hyperbolic_sectional", err.value, tol,
        err.samples));
  }
  {
    const MetricField flat = euclidean_chart(3);
    MaxError err;
    for (int s = 0; s < cfg.samples; ++s) {
      const Riemann R = riemann_fd(flat, random_vector(3, rng), fd);
      double worst = 0.0;
      for (int l = 0; l < 3; ++l)
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(R(l, i, j, k)));
      err.add(worst);
    }
    report.checks.push_back(make_check("flat_riemann_zero", err.value, kFlatTol, err.samples));
  }
  {
    // Error reduction of plain central differences under step halving,
    // measured against the analytic round-sphere Christoffels on S^2(1).
    const ModelSpace unit(ModelSpace::Kind::Sphere2, 1.0);
    const MetricField chart = stereographic_chart(unit);
    double worst_ratio = INFINITY;
    int used = 0;
    for (int s = 0; s < cfg.samples; ++s) {
      const Coords u = random_base_coords(unit, rng);
      const Christoffel exact = round_sphere_christoffel(u);
      const double e1 =
          (christoffel_fd(chart, u, {1e-2, false}).data() - exact.data()).cwiseAbs().maxCoeff();
      const double e2 =
          (christoffel_fd(chart, u, {5e-3, false}).data() - exact.data()).cwiseAbs().maxCoeff();
      if (e1 < 1e-9) continue;  // below the conditioning floor
      worst_ratio = std::min(worst_ratio, e1 / e2);
      ++used;
    }
    report.observations.emplace_back("min_halving_ratio", worst_ratio);
    report.checks.push_back(make_check("convergence_ratio_shortfall",
                                       std::max(0.0, 3.0 - worst_ratio), 0.0, used));
  }
  {
    const MetricParams params(1.0, 1.0, cfg.c);
    const MetricField chart = tangent_bundle_chart(params, {cfg.fd_step, true});
    MaxError err;
    const int n = std::min(cfg.samples, 5);
    for (int s = 0; s < n; ++s) {
      Coords u(4);
      u << random_base_coords(sphere, rng), rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5);
      const Riemann R = riemann_fd(chart, u, fd);
      double worst = 0.0;
      for (int l = 0; l < 4; ++l)
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
              worst = std::max(worst, std::abs(R(l, i, j, k) + R(l, j, k, i) + R(l, k, i, j)));
      err.add(worst);
    }
    report.checks.push_back(make_check("first_bianchi_residual", err.value, kBianchiTol, err.samples));
  }
  {
    const MetricField chart = stereographic_chart(sphere);
    MaxError err;
    for (int s = 0; s < cfg.samples; ++s) {
      const Coords u = random_base_coords(sphere, rng);
      const Coords v = random_vector(2, rng);
      const Coords w = random_vector(2, rng);
      const double a = rng.uniform(0.5, 2.0), b = rng.uniform(-1.0, 1.0);
      const double c2 = rng.uniform(-1.0, 1.0), d = rng.uniform(0.5, 2.0);
      try {
        const double k1 = sectional_fd(chart, u, v, w, fd);
        const double k2 = sectional_fd(chart, u, a * v + b * w, c2 * v + d * w, fd);
        err.add(std::abs(k1 - k2));
      } catch (const DomainError&) {
        continue;
      }
    }
    report.checks.push_back(
        make_check("sectional_plane_invariance", err.value, kPlaneInvarianceTol, err.samples));
  }
  {
    // Great circle eta fixed, xi1 = xi2 = t on the round S^3 chart.
    const MetricField chart = berger_chart(1.0);
    MaxError err;
    for (int s = 0; s < cfg.samples; ++s) {
      const Coords u = random_hopf_chart_point(rng);
      const Christoffel gamma = christoffel_fd(chart, u, fd);
      const Eigen::Vector3d v(0.0, 1.0, 1.0);
      double worst = 0.0;
      for (int k = 0; k < 3; ++k) {
        double acc = 0.0;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) acc += gamma(k, i, j) * v[i] * v[j];
        worst = std::max(worst, std::abs(acc));
      }
      err.add(worst);
    }
    report.checks.push_back(make_check("great_circle_geodesic_residual", err.value, kGeodesicTol,
                                       err.samples));
  }
}

}  // namespace

const char* to_string(Scenario s) {
  for (const auto& n : kScenarios) {
    if (n.scenario == s) return n.name;
  }
  return "?";
}

Scenario scenario_from_string(const std::string& name) {
  for (const auto& n : kScenarios) {
    if (name == n.name) return n.scenario;
  }
  throw InvalidInput("unknown scenario: " + name);
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& n : kScenarios) v.emplace_back(n.name);
    return v;
  }();
  return names;
}

double ScenarioConfig::effective_m() const {
  if (m) return *m;
  if (scenario == Scenario::BergerIsometry && epsilon) {
    return std::log2(*epsilon * *epsilon) + 2.0;
  }
  return std::log2(c);
}

void validate(const ScenarioConfig& cfg) {
  if (!(cfg.c > 0.0) || !std::isfinite(cfg.c)) throw InvalidInput("c must be positive");
  if (!(cfg.r >= 0.0) || !std::isfinite(cfg.r)) throw InvalidInput("r must be non-negative");
  if (cfg.samples < 1) throw InvalidInput("samples must be at least 1");
  if (cfg.tol && !(*cfg.tol > 0.0)) throw InvalidInput("tol must be positive");
  if (!(cfg.fd_step > 0.0 && cfg.fd_step < 0.1)) {
    throw InvalidInput("fd-step must lie in (0, 0.1)");
  }
  if (cfg.m && !std::isfinite(*cfg.m)) throw InvalidInput("m must be finite");
  if (cfg.scenario == Scenario::BergerIsometry) {
    if (!cfg.epsilon) throw InvalidInput("berger-isometry requires --epsilon");
    if (!(*cfg.epsilon > 0.0)) throw InvalidInput("epsilon must be positive");
    if (cfg.c != 4.0) throw InvalidInput("berger-isometry is defined for c = 4");
  }
}

CheckResult make_check(std::string name, double max_abs_error, double threshold, int samples) {
  return {std::move(name), max_abs_error, threshold, max_abs_error <= threshold, samples};
}

Report run_scenario(const ScenarioConfig& cfg) {
  validate(cfg);
  const auto start = Clock::now();
  Report report;
  report.config = cfg;
  switch (cfg.scenario) {
    case Scenario::SphereIsometry: run_sphere_isometry(cfg, report); break;
    case Scenario::BergerIsometry: run_berger_isometry(cfg, report); break;
    case Scenario::HyperbolicImmersion: run_hyperbolic_immersion(cfg, report); break;
    case Scenario::CurvatureClosedVsOracle: run_curvature_closed_vs_oracle(cfg, report); break;
    case Scenario::ConstantCurvatureT1: run_constant_curvature_t1(cfg, report); break;
    case Scenario::PositivitySample: run_positivity_sample(cfg, report); break;
    case Scenario::OracleSanity: run_oracle_sanity(cfg, report); break;
  }
  report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const CheckResult& c) { return c.passed; });
  report.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

std::string report_to_json(const Report& report, bool include_wall_time) {
  using nlohmann::ordered_json;
  const ScenarioConfig& cfg = report.config;
  ordered_json params;
  params["c"] = cfg.c;
  params["m"] = cfg.effective_m();
  params["r"] = cfg.r;
  params["epsilon"] = cfg.epsilon ? ordered_json(*cfg.epsilon) : ordered_json(nullptr);
  params["samples"] = cfg.samples;
  params["seed"] = cfg.seed;
  params["tol"] = cfg.tol ? ordered_json(*cfg.tol) : ordered_json(nullptr);
  params["fd_step"] = cfg.fd_step;
  for (const auto& [key, value] : report.observations) params[key] = value;
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"max_abs_error", c.max_abs_error},
                      {"threshold", c.threshold},
                      {"passed", c.passed},
                      {"samples_used", c.samples_used}});
  }
  ordered_json out;
  out["scenario"] = to_string(cfg.scenario);
  out["params"] = params;
  out["checks"] = checks;
  out["passed"] = report.passed;
  out["wall_ms"] = include_wall_time ? report.wall_ms : 0.0;
  return out.dump(2) + "\n";
}

std::vector<TableRow> curvature_table(const std::vector<double>& c_list,
                                      const std::vector<double>& m_list,
                                      const std::vector<double>& r_list, double fd_step) {
  if (c_list.empty() || m_list.empty() || r_list.empty()) {
    throw InvalidInput("curvature_table: every grid list must be non-empty");
  }
  Coords base(2);
  base << 0.3, -0.2;
  const double theta = 0.7;
  std::vector<TableRow> rows;
  for (const double c : c_list) {
    for (const double m : m_list) {
      for (const double r : r_list) {
        const MetricParams params(m, r, c);
        const PlaneValues k = oracle_lift_sectionals(params, base, theta, false,
                                                     {fd_step, true}, {fd_step, true});
        const std::pair<PlaneSpec, double> planes[] = {
            {PlaneSpec::HH, k.hh}, {PlaneSpec::HV_e, k.hv_e}, {PlaneSpec::HV_f, k.hv_f}};
        for (const auto& [plane, oracle] : planes) {
          const double closed = sectional_T1_closed(params, plane);
          rows.push_back({c, m, r, to_string(plane), closed, oracle, oracle - closed});
        }
      }
    }
  }
  return rows;
}

void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows) {
  os << "c,m,r,plane,closed_form,oracle,delta\n";
  os << std::setprecision(17);
  for (const TableRow& row : rows) {
    os << row.c << ',' << row.m << ',' << row.r << ',' << row.plane << ',' << row.closed_form
       << ',' << row.oracle << ',' << row.delta << '\n';
  }
}

}  // namespace cgm
