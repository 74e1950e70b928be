#pragma once

#include <array>

#include "cgm/bundle.hpp"
#include "cgm/fd_oracle.hpp"
#include "cgm/model_spaces.hpp"

namespace cgm {

// Flat R^n.
MetricField euclidean_chart(int dim);

// Stereographic coordinates u -> stereographic_inverse(u1 + i u2) on S^2(c)
// or H^2(c), with the induced metric from the analytic Jacobian.
MetricField stereographic_chart(const ModelSpace& space);
AmbientVector stereographic_point(const ModelSpace& space, const Coords& u);
std::array<AmbientVector, 2> stereographic_jacobian(const ModelSpace& space, const Coords& u);

// Gram-Schmidt of the stereographic coordinate vectors.
std::array<AmbientVector, 2> adapted_frame(const ModelSpace& space, const Coords& u);

// (u1, u2, theta) -> (x(u), cos(theta) E1 + sin(theta) E2).
BundlePoint unit_bundle_point(const ModelSpace& space, const Coords& u);
// (u1, u2, v1, v2) -> (x(u), v1 E1 + v2 E2).
BundlePoint tangent_bundle_point(const ModelSpace& space, const Coords& u);

// h_{m,r} on the two bundle charts; the base is S^2(c) or H^2(c) according
// to the fibre sign.
MetricField unit_bundle_chart(const MetricParams& params, const DiffRule& inner = {1e-3, true});
MetricField tangent_bundle_chart(const MetricParams& params,
                                 const DiffRule& inner = {1e-3, true});

ModelSpace bundle_base(const MetricParams& params);

// Columns: connection splits of the coordinate vectors, written in the
// adapted frame as (X.E1, X.E2, Y.E1, Y.E2).
Eigen::MatrixXd split_matrix(const ModelSpace& space, const Coords& u, bool unit_bundle,
                             const DiffRule& inner = {1e-3, true});

// Chart coordinates of a bundle tangent at the chart point u (least squares
// on the unit bundle).
Coords tangent_coordinates(const ModelSpace& space, const Coords& u, bool unit_bundle,
                           const BundleTangent& z, const DiffRule& inner = {1e-3, true});

// Unit S^3: (eta, xi1, xi2) -> (cos eta e^{i xi1}, sin eta e^{i xi2}).
AmbientVector hopf_chart_point(const Coords& u);
std::array<AmbientVector, 3> hopf_chart_jacobian(const Coords& u);
// Berger metric in the S^3 chart; epsilon = 1 is the round metric.
MetricField berger_chart(double epsilon);

// Which lifts enter nabla_A B.
enum class LiftKind { Horizontal, Vertical };

using BundleField = std::function<BundleTangent(const Coords&)>;

// nabla_A B on the tangent bundle chart from numerical Christoffels. A sits
// at the chart point u; B(v) must sit at tangent_bundle_point(v).
BundleTangent covariant_derivative_fd(const MetricParams& params, const Coords& u,
                                      const BundleTangent& A, const BundleField& B,
                                      const FDConfig& cfg = {},
                                      const DiffRule& inner = {1e-3, true});

// nabla_A B with A the lift of X at the chart point u and B the lift of the
// field obtained by transporting Y radially from x(u).
BundleTangent lift_connection_fd(const MetricParams& params, LiftKind a_kind, LiftKind b_kind,
                                 const Coords& u, const AmbientVector& X,
                                 const AmbientVector& Y, const FDConfig& cfg = {},
                                 const DiffRule& inner = {1e-3, true});

// Normal coefficient of nabla_{Z1} Z2 along the unit bundle, where Z2 is
// extended by radial transport of its parts and the vertical part is kept
// orthogonal to e. The chart point u must lie on the unit bundle.
double second_fundamental_fd(const MetricParams& params, const Coords& u,
                             const BundleTangent& z1, const BundleTangent& z2,
                             const FDConfig& cfg = {}, const DiffRule& inner = {1e-3, true});

}  // namespace cgm
