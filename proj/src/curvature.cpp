#include "cgm/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cgm/errors.hpp"

namespace cgm {

namespace {

void require_definite(const MetricParams& params, const char* what) {
  if (params.fiber_sign != MetricParams::FiberSign::Definite) {
    throw Unsupported(std::string(what) + ": only the definite fibre metric is supported");
  }
}

void require_base_tangent(const BundlePoint& bp, const AmbientVector& v, const char* what) {
  if (!(v.signature() == bp.x().signature()) || !is_tangent(bp.base(), bp.x(), v)) {
    throw InvalidInput(std::string(what) + ": vector is not tangent to the base");
  }
}

}  // namespace

AmbientVector base_curvature_R(const ModelSpace& space, const AmbientVector& x,
                               const AmbientVector& X, const AmbientVector& Y,
                               const AmbientVector& Z) {
  if (space.dim() != 2) throw InvalidInput("base_curvature_R: base must be a surface");
  if (!contains(space, x, 1e-10)) throw InvalidInput("base_curvature_R: point off the base");
  for (const AmbientVector* v : {&X, &Y, &Z}) {
    if (!(v->signature() == x.signature()) || !is_tangent(space, x, *v)) {
      throw InvalidInput("base_curvature_R: vector is not tangent");
    }
  }
  const double k = space.curvature_sign() * space.c();
  return k * (ambient_dot(Y, Z) * X - ambient_dot(X, Z) * Y);
}

const char* to_string(LiftCase c) {
  switch (c) {
    case LiftCase::hh: return "hh";
    case LiftCase::hv: return "hv";
    case LiftCase::vh: return "vh";
    case LiftCase::vv: return "vv";
  }
  return "?";
}

BundleTangent levi_civita_lift(const MetricParams& params, LiftCase lift_case,
                               const AmbientVector& X, const AmbientVector& Y,
                               const BundlePoint& bp) {
  require_definite(params, "levi_civita_lift");
  require_base_tangent(bp, X, "levi_civita_lift");
  require_base_tangent(bp, Y, "levi_civita_lift");
  const ModelSpace& base = bp.base();
  const AmbientVector& x = bp.x();
  const AmbientVector& e = bp.e();
  const double ee = ambient_dot(e, e);
  const double omega = 1.0 / (1.0 + ee);
  const double wm = std::pow(omega, params.m);
  const AmbientVector zero = AmbientVector::zero(x.signature());
  switch (lift_case) {
    case LiftCase::hh:
      return BundleTangent(bp, zero, -0.5 * base_curvature_R(base, x, X, Y, e));
    case LiftCase::hv:
      return BundleTangent(bp, 0.5 * wm * base_curvature_R(base, x, e, Y, X), zero);
    case LiftCase::vh:
      return BundleTangent(bp, 0.5 * wm * base_curvature_R(base, x, e, X, Y), zero);
    case LiftCase::vv: {
      const double m = params.m;
      const double r = params.r;
      const double omega_r = 1.0 / (1.0 + r * ee);
      const double xe = ambient_dot(X, e);
      const double ye = ambient_dot(Y, e);
      const AmbientVector v = -m * omega * (xe * Y + ye * X) +
                              ((m * omega + r) * omega_r * ambient_dot(X, Y) +
                               m * r * omega * omega_r * xe * ye) *
                                  e;
      return BundleTangent(bp, zero, v);
    }
  }
  throw InvalidInput("levi_civita_lift: unknown case");
}

NormalData normal_field(const MetricParams& params, const BundlePoint& bp) {
  if (!bp.is_unit(1e-10)) throw InvalidInput("normal_field: point is not on the unit bundle");
  const double alpha = std::sqrt(std::pow(2.0, params.m) / (1.0 + params.r));
  return {alpha, alpha * canonical_vertical_U(bp)};
}

double vertical_B_coefficient(const MetricParams& params) {
  const double alpha = std::sqrt(std::pow(2.0, params.m) / (1.0 + params.r));
  // nabla_{X^v} Y^v contributes (m/2 + r)/(1 + r) <X,Y> U; keeping Y^v tangent
  // to the unit bundle along X^v adds -<X,Y> U.
  return (params.m / 2.0 - 1.0) / ((1.0 + params.r) * alpha);
}

double second_fundamental_B(const MetricParams& params, const BundleTangent& z1,
                            const BundleTangent& z2) {
  require_definite(params, "second_fundamental_B");
  if (!same_point(z1.at, z2.at)) throw InvalidInput("second_fundamental_B: base points differ");
  const BundlePoint& bp = z1.at;
  if (!bp.is_unit(1e-10)) {
    throw InvalidInput("second_fundamental_B: point is not on the unit bundle");
  }
  const AmbientVector& e = bp.e();
  const double scale = std::max({1.0, z1.Y.max_abs(), z2.Y.max_abs()});
  if (std::abs(ambient_dot(z1.Y, e)) > 1e-9 * scale ||
      std::abs(ambient_dot(z2.Y, e)) > 1e-9 * scale) {
    throw InvalidInput("second_fundamental_B: tangent is not tangent to the unit bundle");
  }
  return vertical_B_coefficient(params) * ambient_dot(z1.Y, z2.Y);
}

const char* to_string(PlaneSpec p) {
  switch (p) {
    case PlaneSpec::HH: return "HH";
    case PlaneSpec::HV_e: return "HV_e";
    case PlaneSpec::HV_f: return "HV_f";
  }
  return "?";
}

double sectional_T1_closed(const MetricParams& params, PlaneSpec plane) {
  require_definite(params, "sectional_T1_closed");
  const double c = params.c;
  const double q = c * c / std::pow(2.0, params.m + 2.0);
  switch (plane) {
    case PlaneSpec::HH: return c - 3.0 * q;
    case PlaneSpec::HV_e:
    case PlaneSpec::HV_f: return q;
  }
  throw InvalidInput("sectional_T1_closed: unknown plane");
}

std::pair<double, double> berger_sectional(double epsilon) {
  if (!(epsilon > 0.0)) throw InvalidInput("berger_sectional: epsilon must be positive");
  const double inv2 = 1.0 / (epsilon * epsilon);
  return {4.0 - 3.0 * inv2, inv2};
}

PositivityThresholds positivity_thresholds(double m, double r) {
  if (!(r >= 0.0)) throw InvalidInput("positivity_thresholds: r must be non-negative");
  PositivityThresholds out;
  if (r == 0.0) {
    if (m >= 1.0) {
      // pow(0, 0) == 1 gives the m -> 1 limit directly.
      const double ratio = std::pow(m, m) / std::pow(m - 1.0, m - 1.0);
      out.sec_threshold = 4.0 / 3.0 * ratio;
      if (m <= 2.0) out.scal_threshold = 4.0 * ratio;
    }
  } else if (m == 1.0) {
    out.sec_threshold = 4.0 / 3.0;
    out.scal_threshold = 4.0;
  }
  return out;
}

}  // namespace cgm
