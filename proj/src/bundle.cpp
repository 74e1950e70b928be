#include "cgm/bundle.hpp"

#include <cmath>

#include "cgm/errors.hpp"

namespace cgm {

namespace {

void require_tangent(const BundlePoint& bp, const AmbientVector& v, const char* what) {
  if (!(v.signature() == bp.base().signature()) || !is_tangent(bp.base(), bp.x(), v)) {
    throw InvalidInput(std::string(what) + ": vector is not tangent to the base");
  }
}

}  // namespace

BundlePoint::BundlePoint(const ModelSpace& base, const AmbientVector& x, const AmbientVector& e)
    : base_(base), x_(x), e_(e) {
  if (base.dim() != 2) throw InvalidInput("bundle points live over Sphere2 or HyperbolicPlane");
  if (!contains(base, x)) throw InvalidInput("bundle point: base point is off the model space");
  if (!(e.signature() == base.signature()) || !is_tangent(base, x, e)) {
    throw InvalidInput("bundle point: fiber vector is not tangent");
  }
}

bool BundlePoint::is_unit(double tol) const { return std::abs(ambient_dot(e_, e_) - 1.0) <= tol; }

bool same_point(const BundlePoint& a, const BundlePoint& b, double tol) {
  return a.base() == b.base() && max_abs_diff(a.x(), b.x()) <= tol &&
         max_abs_diff(a.e(), b.e()) <= tol;
}

BundleTangent::BundleTangent(const BundlePoint& at_, const AmbientVector& X_,
                             const AmbientVector& Y_)
    : at(at_), X(X_), Y(Y_) {
  // Loose check: numerically split tangents carry truncation error.
  if (!(X.signature() == at.base().signature()) || !(Y.signature() == at.base().signature()) ||
      !is_tangent(at.base(), at.x(), X, 1e-6) || !is_tangent(at.base(), at.x(), Y, 1e-6)) {
    throw InvalidInput("bundle tangent: data are not tangent to the base");
  }
}

BundleTangent& BundleTangent::operator+=(const BundleTangent& other) {
  if (!same_point(at, other.at)) throw InvalidInput("bundle tangents at different points");
  X += other.X;
  Y += other.Y;
  return *this;
}

BundleTangent& BundleTangent::operator*=(double s) {
  X *= s;
  Y *= s;
  return *this;
}

BundleTangent operator+(BundleTangent a, const BundleTangent& b) { return a += b; }
BundleTangent operator-(BundleTangent a, const BundleTangent& b) { return a += (-1.0) * b; }
BundleTangent operator*(double s, BundleTangent a) { return a *= s; }
BundleTangent operator*(BundleTangent a, double s) { return a *= s; }

double max_abs_diff(const BundleTangent& a, const BundleTangent& b) {
  return std::max(max_abs_diff(a.X, b.X), max_abs_diff(a.Y, b.Y));
}

MetricParams::MetricParams(double m_, double r_, double c_, FiberSign sign)
    : m(m_), r(r_), c(c_), fiber_sign(sign) {
  if (!std::isfinite(m)) throw InvalidInput("metric parameter m must be finite");
  if (!(r >= 0.0) || !std::isfinite(r)) throw InvalidInput("metric parameter r must be >= 0");
  if (!(c > 0.0) || !std::isfinite(c)) throw InvalidInput("metric parameter c must be positive");
}

BundleTangent horizontal_lift(const BundlePoint& bp, const AmbientVector& X) {
  require_tangent(bp, X, "horizontal_lift");
  return BundleTangent(bp, X, AmbientVector::zero(X.signature()));
}

BundleTangent vertical_lift(const BundlePoint& bp, const AmbientVector& Y) {
  require_tangent(bp, Y, "vertical_lift");
  return BundleTangent(bp, AmbientVector::zero(Y.signature()), Y);
}

BundleTangent canonical_vertical_U(const BundlePoint& bp) { return vertical_lift(bp, bp.e()); }

BundlePoint horizontal_curve(const BundlePoint& bp, const AmbientVector& X, double t) {
  require_tangent(bp, X, "horizontal_curve");
  const ModelSpace& base = bp.base();
  const double speed = std::sqrt(std::max(0.0, ambient_dot(X, X)));
  if (speed == 0.0) return bp;
  const AmbientVector v = X / speed;
  return BundlePoint(base, geodesic(base, bp.x(), v, speed * t),
                     parallel_transport(base, bp.x(), v, bp.e(), speed * t));
}

BundleTangent split_tangential(const BundlePoint& bp, const CurveDatum& z) {
  return BundleTangent(bp, z.xdot, project_tangent(bp.base(), bp.x(), z.edot));
}

CurveDatum curve_derivative(const BundleCurve& curve, const DiffRule& rule) {
  struct Pair {
    AmbientVector x, e;
    Pair operator-(const Pair& o) const { return {x - o.x, e - o.e}; }
    Pair operator*(double s) const { return {x * s, e * s}; }
  };
  const Pair d = central_derivative(
      [&](double t) {
        const BundlePoint p = curve(t);
        return Pair{p.x(), p.e()};
      },
      rule);
  return {d.x, d.e};
}

BundleTangent connection_split(const BundleCurve& curve, const DiffRule& rule) {
  const BundlePoint bp = curve(0.0);
  const ModelSpace& base = bp.base();
  struct Pair {
    AmbientVector x, k;
    Pair operator-(const Pair& o) const { return {x - o.x, k - o.k}; }
    Pair operator*(double s) const { return {x * s, k * s}; }
  };
  // exp_x(tau(e(t)) - e): tau brings e(t) back to T_x along the geodesic.
  const Pair d = central_derivative(
      [&](double t) {
        const BundlePoint p = curve(t);
        if (!(p.base() == base)) throw InvalidInput("connection_split: curve changes base");
        const AmbientVector back = transport_between(base, p.x(), bp.x(), p.e());
        return Pair{p.x(), exp_map(base, bp.x(), project_tangent(base, bp.x(), back - bp.e()))};
      },
      rule);
  return BundleTangent(bp, d.x, d.k);
}

BundleTangent connection_split(const BundlePoint& bp, const CurveDatum& z, const DiffRule& rule) {
  const ModelSpace& base = bp.base();
  if (!is_tangent(base, bp.x(), z.xdot)) throw InvalidInput("connection_split: x' not tangent");
  // Tangency of (x', e') to TM: <x', e> + <x, e'> = 0.
  const double defect = ambient_dot(z.xdot, bp.e()) + ambient_dot(bp.x(), z.edot);
  if (std::abs(defect) * std::sqrt(base.c()) >
      1e-8 * std::max({1.0, z.xdot.max_abs(), z.edot.max_abs()})) {
    throw InvalidInput("connection_split: datum is not tangent to TM");
  }
  const double speed = std::sqrt(std::max(0.0, ambient_dot(z.xdot, z.xdot)));
  const BundleCurve curve = [&](double t) {
    AmbientVector x = bp.x();
    if (speed > 0.0) x = geodesic(base, bp.x(), z.xdot / speed, speed * t);
    return BundlePoint(base, x, project_tangent(base, x, bp.e() + t * z.edot));
  };
  return connection_split(curve, rule);
}

double metric_h(const MetricParams& params, const BundleTangent& z1, const BundleTangent& z2) {
  if (!same_point(z1.at, z2.at)) throw InvalidInput("metric_h: tangents at different points");
  const BundlePoint& bp = z1.at;
  if (params.fiber_sign == MetricParams::FiberSign::Indefinite && bp.base().is_spherical()) {
    throw InvalidInput("metric_h: indefinite fiber sign needs a hyperbolic base");
  }
  if (std::abs(params.c - bp.base().c()) > 1e-12 * params.c) {
    throw InvalidInput("metric_h: parameter c does not match the base space");
  }
  const AmbientVector& e = bp.e();
  const double denom = 1.0 + ambient_dot(e, e);
  if (!(denom > 0.0)) throw DomainError("metric_h: 1 + <e,e> must be positive");
  const double omega = 1.0 / denom;
  const double horizontal = ambient_dot(z1.X, z2.X);
  const double vertical = ambient_dot(z1.Y, z2.Y) +
                          params.r * ambient_dot(z1.Y, e) * ambient_dot(z2.Y, e);
  return horizontal + params.sign() * std::pow(omega, params.m) * vertical;
}

double berger_metric(double epsilon, const AmbientVector& x, const AmbientVector& v,
                     const AmbientVector& w) {
  if (!(epsilon > 0.0)) throw InvalidInput("berger_metric: epsilon must be positive");
  const ModelSpace s3(ModelSpace::Kind::Sphere3, 1.0);
  const FramePoint fp = frame_fields(s3, x);
  if (!is_tangent(s3, x, v) || !is_tangent(s3, x, w)) {
    throw InvalidInput("berger_metric: vectors are not tangent");
  }
  double g = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double weight = (i == 2) ? 1.0 / (epsilon * epsilon) : 1.0;
    g += weight * ambient_dot(v, fp.frame[i]) * ambient_dot(w, fp.frame[i]);
  }
  return g;
}

}  // namespace cgm
