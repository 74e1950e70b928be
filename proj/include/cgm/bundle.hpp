#pragma once

#include <functional>

#include "cgm/ambient.hpp"
#include "cgm/model_spaces.hpp"
#include "cgm/numdiff.hpp"

namespace cgm {

// A point (x, e) of TM over a two-dimensional model space.
class BundlePoint {
 public:
  BundlePoint(const ModelSpace& base, const AmbientVector& x, const AmbientVector& e);

  const ModelSpace& base() const { return base_; }
  const AmbientVector& x() const { return x_; }
  const AmbientVector& e() const { return e_; }
  bool is_unit(double tol = 1e-10) const;

 private:
  ModelSpace base_;
  AmbientVector x_;
  AmbientVector e_;
};

bool same_point(const BundlePoint& a, const BundlePoint& b, double tol = 1e-10);

// X^h + Y^v at a bundle point, stored already split.
struct BundleTangent {
  BundleTangent(const BundlePoint& at, const AmbientVector& X, const AmbientVector& Y);

  BundlePoint at;
  AmbientVector X;  // horizontal datum, dpi(Z)
  AmbientVector Y;  // vertical datum, K(Z)

  BundleTangent& operator+=(const BundleTangent& other);
  BundleTangent& operator*=(double s);
};

BundleTangent operator+(BundleTangent a, const BundleTangent& b);
BundleTangent operator-(BundleTangent a, const BundleTangent& b);
BundleTangent operator*(double s, BundleTangent a);
BundleTangent operator*(BundleTangent a, double s);

// Largest componentwise difference of the X and Y parts.
double max_abs_diff(const BundleTangent& a, const BundleTangent& b);

// Raw derivative (x', e') of an ambient curve (x(t), e(t)) in TM.
struct CurveDatum {
  AmbientVector xdot;
  AmbientVector edot;
};

using BundleCurve = std::function<BundlePoint(double)>;

struct MetricParams {
  enum class FiberSign { Definite, Indefinite };

  MetricParams(double m, double r, double c, FiberSign sign = FiberSign::Definite);

  double m;
  double r;
  double c;
  FiberSign fiber_sign;

  double sign() const { return fiber_sign == FiberSign::Definite ? 1.0 : -1.0; }
};

BundleTangent horizontal_lift(const BundlePoint& bp, const AmbientVector& X);
BundleTangent vertical_lift(const BundlePoint& bp, const AmbientVector& Y);
BundleTangent canonical_vertical_U(const BundlePoint& bp);

// Gamma(t) = (gamma(t), parallel transport of e) with gamma the geodesic of
// initial velocity X; its velocity at 0 is X^h.
BundlePoint horizontal_curve(const BundlePoint& bp, const AmbientVector& X, double t);

// Splits a raw derivative with the Levi-Civita connection of the embedded
// base: Y is the tangential part of e'.
BundleTangent split_tangential(const BundlePoint& bp, const CurveDatum& z);

// Numerical derivative of a bundle curve at 0 in ambient coordinates.
CurveDatum curve_derivative(const BundleCurve& curve, const DiffRule& rule = {});

// X = dpi(Z) and Y = K(Z), where K differentiates exp_x o R_{-e} o tau along
// the curve numerically.
BundleTangent connection_split(const BundleCurve& curve, const DiffRule& rule = {});
BundleTangent connection_split(const BundlePoint& bp, const CurveDatum& z,
                               const DiffRule& rule = {});

double metric_h(const MetricParams& params, const BundleTangent& z1, const BundleTangent& z2);

// Berger metric on unit S^3 making {X1, X2, eps X3} orthonormal.
double berger_metric(double epsilon, const AmbientVector& x, const AmbientVector& v,
                     const AmbientVector& w);

}  // namespace cgm
