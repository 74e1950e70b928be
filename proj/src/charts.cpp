#include "cgm/charts.hpp"

#include <Eigen/LU>
#include <Eigen/QR>
#include <cmath>
#include <numbers>

#include "cgm/errors.hpp"

namespace cgm {

namespace {

Box make_box(std::initializer_list<double> lo, std::initializer_list<double> hi) {
  Box b;
  b.lo = Eigen::Map<const Eigen::VectorXd>(lo.begin(), static_cast<Eigen::Index>(lo.size()));
  b.hi = Eigen::Map<const Eigen::VectorXd>(hi.begin(), static_cast<Eigen::Index>(hi.size()));
  return b;
}

void require_surface(const ModelSpace& space) {
  if (space.kind() != ModelSpace::Kind::Sphere2 &&
      space.kind() != ModelSpace::Kind::HyperbolicPlane) {
    throw InvalidInput("chart: base must be S^2(c) or H^2(c)");
  }
}

Box base_box(const ModelSpace& space) {
  if (space.is_spherical()) return make_box({-2.0, -2.0}, {2.0, 2.0});
  return make_box({-0.65, -0.65}, {0.65, 0.65});
}

Coords shifted(const Coords& u, int i, double t) {
  Coords v = u;
  v[i] += t;
  return v;
}

Eigen::Vector2d frame_coords(const std::array<AmbientVector, 2>& E, const AmbientVector& v) {
  return {ambient_dot(v, E[0]), ambient_dot(v, E[1])};
}

AmbientVector from_frame(const std::array<AmbientVector, 2>& E, double a, double b) {
  return a * E[0] + b * E[1];
}

}  // namespace

MetricField euclidean_chart(int dim) {
  if (dim < 1) throw InvalidInput("euclidean_chart: dimension must be positive");
  MetricField f;
  f.name = "euclidean";
  f.dim = dim;
  f.box.lo = Eigen::VectorXd::Constant(dim, -10.0);
  f.box.hi = Eigen::VectorXd::Constant(dim, 10.0);
  f.eval = [dim](const Coords&) { return Eigen::MatrixXd::Identity(dim, dim); };
  return f;
}

AmbientVector stereographic_point(const ModelSpace& space, const Coords& u) {
  return stereographic_inverse(space, {u[0], u[1]});
}

std::array<AmbientVector, 2> stereographic_jacobian(const ModelSpace& space, const Coords& u) {
  require_surface(space);
  const double a = u[0];
  const double b = u[1];
  const double n2 = a * a + b * b;
  const double k = std::sqrt(space.c());
  if (space.is_spherical()) {
    const double d = 1.0 + n2;
    const double s = 1.0 / (d * d * k);
    return {AmbientVector({2.0 * (d - 2.0 * a * a) * s, -4.0 * a * b * s, 4.0 * a * s}, kEuclidean3),
            AmbientVector({-4.0 * a * b * s, 2.0 * (d - 2.0 * b * b) * s, 4.0 * b * s}, kEuclidean3)};
  }
  if (!(n2 < 1.0)) throw DomainError("stereographic_jacobian: outside the unit disk");
  const double d = 1.0 - n2;
  const double s = 1.0 / (d * d * k);
  return {AmbientVector({2.0 * (d + 2.0 * a * a) * s, 4.0 * a * b * s, 4.0 * a * s}, kMinkowski3),
          AmbientVector({4.0 * a * b * s, 2.0 * (d + 2.0 * b * b) * s, 4.0 * b * s}, kMinkowski3)};
}

MetricField stereographic_chart(const ModelSpace& space) {
  require_surface(space);
  MetricField f;
  f.name = std::string("stereographic ") + to_string(space.kind());
  f.dim = 2;
  f.box = base_box(space);
  f.eval = [space](const Coords& u) {
    const auto J = stereographic_jacobian(space, u);
    Eigen::MatrixXd g(2, 2);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) g(i, j) = ambient_dot(J[i], J[j]);
    }
    return g;
  };
  return f;
}

std::array<AmbientVector, 2> adapted_frame(const ModelSpace& space, const Coords& u) {
  const auto J = stereographic_jacobian(space, u);
  const AmbientVector e1 = J[0] / std::sqrt(ambient_dot(J[0], J[0]));
  AmbientVector e2 = J[1] - ambient_dot(J[1], e1) * e1;
  e2 /= std::sqrt(ambient_dot(e2, e2));
  return {e1, e2};
}

BundlePoint unit_bundle_point(const ModelSpace& space, const Coords& u) {
  const auto E = adapted_frame(space, u);
  return BundlePoint(space, stereographic_point(space, u),
                     from_frame(E, std::cos(u[2]), std::sin(u[2])));
}

BundlePoint tangent_bundle_point(const ModelSpace& space, const Coords& u) {
  const auto E = adapted_frame(space, u);
  return BundlePoint(space, stereographic_point(space, u), from_frame(E, u[2], u[3]));
}

ModelSpace bundle_base(const MetricParams& params) {
  return params.fiber_sign == MetricParams::FiberSign::Definite
             ? ModelSpace(ModelSpace::Kind::Sphere2, params.c)
             : ModelSpace(ModelSpace::Kind::HyperbolicPlane, params.c);
}

namespace {

MetricField bundle_chart(const MetricParams& params, const DiffRule& inner, bool unit) {
  const ModelSpace space = bundle_base(params);
  MetricField f;
  f.name = unit ? "unit bundle" : "tangent bundle";
  f.dim = unit ? 3 : 4;
  const Box b = base_box(space);
  f.box.lo.resize(f.dim);
  f.box.hi.resize(f.dim);
  f.box.lo.head(2) = b.lo;
  f.box.hi.head(2) = b.hi;
  if (unit) {
    f.box.lo[2] = -4.0;
    f.box.hi[2] = 4.0;
  } else {
    f.box.lo.tail(2).setConstant(-3.0);
    f.box.hi.tail(2).setConstant(3.0);
  }
  f.eval = [params, space, inner, unit](const Coords& u) {
    const auto embed = [&](const Coords& v) {
      return unit ? unit_bundle_point(space, v) : tangent_bundle_point(space, v);
    };
    return pullback_fd(embed, params, u, inner);
  };
  return f;
}

}  // namespace

MetricField unit_bundle_chart(const MetricParams& params, const DiffRule& inner) {
  return bundle_chart(params, inner, true);
}

MetricField tangent_bundle_chart(const MetricParams& params, const DiffRule& inner) {
  return bundle_chart(params, inner, false);
}

Eigen::MatrixXd split_matrix(const ModelSpace& space, const Coords& u, bool unit_bundle,
                             const DiffRule& inner) {
  const int n = unit_bundle ? 3 : 4;
  if (u.size() != n) throw InvalidInput("split_matrix: coordinate dimension mismatch");
  const auto E = adapted_frame(space, u);
  Eigen::MatrixXd S(4, n);
  for (int i = 0; i < n; ++i) {
    const BundleTangent z = connection_split(
        [&](double t) {
          const Coords v = shifted(u, i, t);
          return unit_bundle ? unit_bundle_point(space, v) : tangent_bundle_point(space, v);
        },
        inner);
    S.col(i) << frame_coords(E, z.X), frame_coords(E, z.Y);
  }
  return S;
}

Coords tangent_coordinates(const ModelSpace& space, const Coords& u, bool unit_bundle,
                           const BundleTangent& z, const DiffRule& inner) {
  const auto E = adapted_frame(space, u);
  Eigen::Vector4d target;
  target << frame_coords(E, z.X), frame_coords(E, z.Y);
  const Eigen::MatrixXd S = split_matrix(space, u, unit_bundle, inner);
  return S.colPivHouseholderQr().solve(target);
}

AmbientVector hopf_chart_point(const Coords& u) {
  const double ce = std::cos(u[0]);
  const double se = std::sin(u[0]);
  return AmbientVector({ce * std::cos(u[1]), ce * std::sin(u[1]), se * std::cos(u[2]),
                        se * std::sin(u[2])},
                       kEuclidean4);
}

std::array<AmbientVector, 3> hopf_chart_jacobian(const Coords& u) {
  const double ce = std::cos(u[0]);
  const double se = std::sin(u[0]);
  const double c1 = std::cos(u[1]), s1 = std::sin(u[1]);
  const double c2 = std::cos(u[2]), s2 = std::sin(u[2]);
  return {AmbientVector({-se * c1, -se * s1, ce * c2, ce * s2}, kEuclidean4),
          AmbientVector({-ce * s1, ce * c1, 0.0, 0.0}, kEuclidean4),
          AmbientVector({0.0, 0.0, -se * s2, se * c2}, kEuclidean4)};
}

MetricField berger_chart(double epsilon) {
  if (!(epsilon > 0.0)) throw InvalidInput("berger_chart: epsilon must be positive");
  MetricField f;
  f.name = "berger S^3";
  f.dim = 3;
  f.box = make_box({0.1, -std::numbers::pi, -std::numbers::pi},
                   {std::numbers::pi / 2.0 - 0.1, std::numbers::pi, std::numbers::pi});
  f.eval = [epsilon](const Coords& u) {
    const AmbientVector p = hopf_chart_point(u);
    const auto J = hopf_chart_jacobian(u);
    Eigen::MatrixXd g(3, 3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) g(i, j) = berger_metric(epsilon, p, J[i], J[j]);
    }
    return g;
  };
  return f;
}

BundleTangent covariant_derivative_fd(const MetricParams& params, const Coords& u,
                                      const BundleTangent& A, const BundleField& B,
                                      const FDConfig& cfg, const DiffRule& inner) {
  const ModelSpace space = bundle_base(params);
  const MetricField field = tangent_bundle_chart(params, inner);
  const BundlePoint bp = tangent_bundle_point(space, u);
  if (!same_point(A.at, bp)) throw InvalidInput("covariant_derivative_fd: A is not at u");
  const auto chart_coords = [&](const Coords& v) -> Coords {
    const BundleTangent z = B(v);
    const auto E = adapted_frame(space, v);
    Eigen::Vector4d s;
    s << frame_coords(E, z.X), frame_coords(E, z.Y);
    return split_matrix(space, v, false, inner).lu().solve(s);
  };
  const auto E0 = adapted_frame(space, u);
  const Eigen::MatrixXd S0 = split_matrix(space, u, false, inner);
  Eigen::Vector4d sa;
  sa << frame_coords(E0, A.X), frame_coords(E0, A.Y);
  const Coords a = S0.lu().solve(sa);
  const Coords b = chart_coords(u);
  const Christoffel gamma = christoffel_fd(field, u, cfg);
  const DiffRule rule = cfg.rule();
  Coords nabla = Coords::Zero(4);
  for (int i = 0; i < 4; ++i) {
    nabla += a[i] * central_derivative([&](double t) { return chart_coords(shifted(u, i, t)); }, rule);
  }
  for (int k = 0; k < 4; ++k) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) nabla[k] += gamma(k, i, j) * a[i] * b[j];
    }
  }
  const Eigen::Vector4d s = S0 * nabla;
  return BundleTangent(bp, from_frame(E0, s[0], s[1]), from_frame(E0, s[2], s[3]));
}

BundleTangent lift_connection_fd(const MetricParams& params, LiftKind a_kind, LiftKind b_kind,
                                 const Coords& u, const AmbientVector& X,
                                 const AmbientVector& Y, const FDConfig& cfg,
                                 const DiffRule& inner) {
  const ModelSpace space = bundle_base(params);
  const BundlePoint bp = tangent_bundle_point(space, u);
  const AmbientVector& x0 = bp.x();
  if (!is_tangent(space, x0, X) || !is_tangent(space, x0, Y)) {
    throw InvalidInput("lift_connection_fd: vectors are not tangent at the chart point");
  }
  const BundleTangent A =
      a_kind == LiftKind::Horizontal ? horizontal_lift(bp, X) : vertical_lift(bp, X);
  const BundleField B = [&](const Coords& v) {
    const BundlePoint q = tangent_bundle_point(space, v);
    const AmbientVector Yv = transport_between(space, x0, q.x(), Y);
    return b_kind == LiftKind::Horizontal ? horizontal_lift(q, Yv) : vertical_lift(q, Yv);
  };
  return covariant_derivative_fd(params, u, A, B, cfg, inner);
}

double second_fundamental_fd(const MetricParams& params, const Coords& u,
                             const BundleTangent& z1, const BundleTangent& z2,
                             const FDConfig& cfg, const DiffRule& inner) {
  const ModelSpace space = bundle_base(params);
  const BundlePoint bp = tangent_bundle_point(space, u);
  if (!bp.is_unit(1e-10)) throw InvalidInput("second_fundamental_fd: chart point is not unit");
  const AmbientVector& x0 = bp.x();
  const BundleField B = [&](const Coords& v) {
    const BundlePoint q = tangent_bundle_point(space, v);
    const AmbientVector X = transport_between(space, x0, q.x(), z2.X);
    AmbientVector Y = transport_between(space, x0, q.x(), z2.Y);
    Y -= ambient_dot(Y, q.e()) / ambient_dot(q.e(), q.e()) * q.e();
    return BundleTangent(q, X, Y);
  };
  const BundleTangent nabla = covariant_derivative_fd(params, u, z1, B, cfg, inner);
  const double alpha = std::sqrt(std::pow(2.0, params.m) / (1.0 + params.r));
  const BundleTangent n = alpha * canonical_vertical_U(bp);
  return params.sign() * metric_h(params, nabla, n);
}

}  // namespace cgm
