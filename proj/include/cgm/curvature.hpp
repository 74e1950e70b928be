#pragma once

#include <optional>
#include <utility>

#include "cgm/ambient.hpp"
#include "cgm/bundle.hpp"
#include "cgm/model_spaces.hpp"

namespace cgm {

// R(X,Y)Z = +-c(<Y,Z>X - <X,Z>Y), so S^2(c) has K = c and H^2(c) has K = -c.
AmbientVector base_curvature_R(const ModelSpace& space, const AmbientVector& x,
                               const AmbientVector& X, const AmbientVector& Y,
                               const AmbientVector& Z);

enum class LiftCase { hh, hv, vh, vv };

const char* to_string(LiftCase c);

// nabla_{A} B for A, B the lifts of X, Y selected by the case. Y is treated as
// a field with vanishing base derivative at bp.x, so only the curvature and
// fibre terms survive. Definite fibre metric only.
BundleTangent levi_civita_lift(const MetricParams& params, LiftCase lift_case,
                               const AmbientVector& X, const AmbientVector& Y,
                               const BundlePoint& bp);

struct NormalData {
  double alpha;
  BundleTangent n;
};

NormalData normal_field(const MetricParams& params, const BundlePoint& bp);

// Coefficient of n in the normal part of nabla_{Z1} Z2, with Z2 extended as a
// field tangent to the unit bundle.
double second_fundamental_B(const MetricParams& params, const BundleTangent& z1,
                            const BundleTangent& z2);

// Coefficient of <X,Y> in B(X^v, Y^v).
double vertical_B_coefficient(const MetricParams& params);

enum class PlaneSpec { HH, HV_e, HV_f };

const char* to_string(PlaneSpec p);

double sectional_T1_closed(const MetricParams& params, PlaneSpec plane);

// (K(X1 ^ X2), K(X1 ^ X3)) for the Berger metric with |X3| = 1/epsilon.
std::pair<double, double> berger_sectional(double epsilon);

struct PositivityThresholds {
  std::optional<double> sec_threshold;
  std::optional<double> scal_threshold;
};

// Upper bounds on c below which the unit bundle has positive sectional or
// scalar curvature.
PositivityThresholds positivity_thresholds(double m, double r);

}  // namespace cgm
