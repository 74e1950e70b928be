#include <cmath>

#include "cgm/errors.hpp"
#include "cgm/lie_bridge.hpp"
#include "support.hpp"

using namespace cgm;
using namespace cgm::testing;
using Kind = ModelSpace::Kind;
using Sign = MetricParams::FiberSign;

namespace {

BundlePoint random_unit_point(const ModelSpace& base, Rng& rng) {
  const AmbientVector x = sample_point(base, rng);
  return BundlePoint(base, x, sample_unit_tangent(base, x, rng));
}

// Unit f orthogonal to e at a unit point.
AmbientVector orthogonal_unit(const BundlePoint& bp, Rng& rng) {
  AmbientVector f = sample_tangent(bp.base(), bp.x(), rng);
  f -= ambient_dot(f, bp.e()) * bp.e();
  return f / std::sqrt(ambient_dot(f, f));
}

}  // namespace

TEST(BundlePoint, ValidatesInputs) {
  const ModelSpace s2(Kind::Sphere2, 1.0);
  EXPECT_THROW(BundlePoint(s2, e3v({0, 0, 2}), e3v({1, 0, 0})), InvalidInput);
  EXPECT_THROW(BundlePoint(s2, e3v({0, 0, 1}), e3v({0, 0, 1})), InvalidInput);
  EXPECT_TRUE(BundlePoint(s2, e3v({0, 0, 1}), e3v({0, 1, 0})).is_unit());
}

TEST(Lifts, ZeroAndTangency) {
  const ModelSpace s2(Kind::Sphere2, 1.0);
  const BundlePoint bp(s2, e3v({0, 0, 1}), e3v({1, 0, 0}));
  const BundleTangent h = horizontal_lift(bp, e3v({0, 0, 0}));
  const BundleTangent v = vertical_lift(bp, e3v({0, 0, 0}));
  EXPECT_EQ(h.X.max_abs() + h.Y.max_abs() + v.X.max_abs() + v.Y.max_abs(), 0.0);
  EXPECT_THROW(horizontal_lift(bp, e3v({0, 0, 1})), InvalidInput);
  EXPECT_THROW(vertical_lift(bp, e3v({0, 0, 1})), InvalidInput);
}

TEST(Lifts, LiftIdentitiesAtTheIdentity) {
  const AmbientVector p = e4v({1, 0, 0, 0});
  const double c = 4.0;
  const BundlePoint bp = covering_F(p, c);
  const auto tilde = tilde_frame(p, c);
  const AmbientVector f = companion_f(p, c);
  EXPECT_TRUE(near(f, e3v({0, -1, 0}), 1e-15));
  const double k = std::sqrt(c) / 2.0;
  EXPECT_TRUE(near(horizontal_lift(bp, f), split_tangential(bp, {k * tilde[0].xdot, k * tilde[0].edot}), 1e-15));
  EXPECT_TRUE(near(horizontal_lift(bp, f).X, e3v({0, -1, 0}), 1e-15));
  EXPECT_TRUE(near(vertical_lift(bp, -2.0 * f), split_tangential(bp, tilde[2]), 1e-15));
  EXPECT_TRUE(near(split_tangential(bp, tilde[2]).Y, e3v({0, 2, 0}), 1e-15));
  // e~2 carries a normal vertical component that the split discards.
  EXPECT_TRUE(near(horizontal_lift(bp, bp.e()), connection_split(bp, {k * tilde[1].xdot, k * tilde[1].edot}), 1e-6));
}

TEST(Lifts, HyperbolicIdentityAtTimeAxis) {
  const AmbientVector p = n4v({0, 0, 1, 0});
  const double c = 4.0;
  const BundlePoint bp = covering_F(p, c);
  const AmbientVector f = companion_f(p, c);
  EXPECT_TRUE(near(f, m3v({0, 1, 0}), 1e-15));
  EXPECT_TRUE(near(vertical_lift(bp, -2.0 * f), split_tangential(bp, tilde_frame(p, c)[2]), 1e-15));
}

TEST(Lifts, FrameIdentitiesHoldEverywhere) {
  Rng rng(21);
  for (const Kind kind : {Kind::Sphere3, Kind::AntiDeSitter3}) {
    for (double c : {1.0, 4.0, 9.0}) {
      const ModelSpace source(kind, c / 4.0);
      for (int i = 0; i < 500; ++i) {
        const AmbientVector p = sample_point(source, rng);
        const BundlePoint bp = covering_F(p, c);
        const FramePoint fp = frame_fields(source, p);
        const AmbientVector f = companion_f(p, c);
        // dF(X_i) = (sqrt c / 2) e~_i up to the orientation of the hyperbolic frame.
        const double s = kind == Kind::Sphere3 ? 1.0 : -1.0;
        EXPECT_TRUE(near(dF_closed(p, c, fp.frame[1]), s * horizontal_lift(bp, bp.e()), 1e-10));
        EXPECT_TRUE(near(dF_closed(p, c, fp.frame[0]), horizontal_lift(bp, f), 1e-10));
        EXPECT_TRUE(near(split_tangential(bp, tilde_frame(p, c)[2]), vertical_lift(bp, -2.0 * f), 1e-10));
      }
    }
  }
}

TEST(ConnectionSplit, VerticalCurve) {
  const ModelSpace s2(Kind::Sphere2, 1.0);
  const AmbientVector x = e3v({0, 0, 1});
  const BundleTangent z = connection_split([&](double t) {
    return BundlePoint(s2, x, e3v({std::cos(t), std::sin(t), 0}));
  });
  EXPECT_TRUE(near(z.X, e3v({0, 0, 0}), 0.0));
  EXPECT_TRUE(near(z.Y, e3v({0, 1, 0}), 1e-9));
}

TEST(ConnectionSplit, HorizontalCurveHasNoVerticalPart) {
  Rng rng(22);
  for (const Kind kind : {Kind::Sphere2, Kind::HyperbolicPlane}) {
    const ModelSpace base(kind, 2.0);
    for (int i = 0; i < 50; ++i) {
      const BundlePoint bp = random_unit_point(base, rng);
      const AmbientVector X = sample_unit_tangent(base, bp.x(), rng);
      const BundleTangent z = connection_split([&](double t) { return horizontal_curve(bp, X, t); });
      EXPECT_TRUE(near(z, horizontal_lift(bp, X), 1e-6));
    }
  }
}

TEST(ConnectionSplit, RoundTripsLifts) {
  Rng rng(23);
  for (const Kind kind : {Kind::Sphere2, Kind::HyperbolicPlane}) {
    const ModelSpace base(kind, 3.0);
    for (int i = 0; i < 50; ++i) {
      const AmbientVector x = sample_point(base, rng);
      const BundlePoint bp(base, x, sample_tangent(base, x, rng));
      const AmbientVector X = sample_tangent(base, x, rng);
      const AmbientVector Y = sample_tangent(base, x, rng);
      // Raw derivative of (gamma(t), tau(e) + tY) is (X, -<X, e> x c + Y) in ambient form.
      const double kc = base.curvature_sign() * base.c();
      const CurveDatum hz{X, -kc * ambient_dot(X, bp.e()) * x};
      EXPECT_TRUE(near(connection_split(bp, hz), horizontal_lift(bp, X), 1e-6));
      EXPECT_TRUE(near(connection_split(bp, {AmbientVector::zero(x.signature()), Y}), vertical_lift(bp, Y), 1e-6));
    }
  }
}

TEST(ConnectionSplit, MapsTildeE3ToMinusTwoF) {
  const AmbientVector p = e4v({1, 0, 0, 0});
  const BundlePoint bp = covering_F(p, 4.0);
  const BundleTangent z = connection_split(bp, tilde_frame(p, 4.0)[2]);
  EXPECT_TRUE(near(z.Y, -2.0 * companion_f(p, 4.0), 1e-6));
}

TEST(MetricH, Examples) {
  const ModelSpace s2(Kind::Sphere2, 1.0);
  const BundlePoint bp(s2, e3v({0, 0, 1}), e3v({1, 0, 0}));
  const AmbientVector y = e3v({0.3, -0.7, 0});
  EXPECT_DOUBLE_EQ(metric_h(MetricParams(0, 0, 1), vertical_lift(bp, y), vertical_lift(bp, y)),
                   ambient_dot(y, y));
  EXPECT_DOUBLE_EQ(metric_h(MetricParams(1, 1, 1), vertical_lift(bp, bp.e()), vertical_lift(bp, bp.e())), 1.0);
  const AmbientVector f = e3v({0, 2, 0});
  EXPECT_DOUBLE_EQ(metric_h(MetricParams(2, 0, 1), vertical_lift(bp, f), vertical_lift(bp, f)), 1.0);
  EXPECT_DOUBLE_EQ(metric_h(MetricParams(2, 0, 1), canonical_vertical_U(bp), canonical_vertical_U(bp)), 0.25);
  EXPECT_EQ(metric_h(MetricParams(2, 3, 1), canonical_vertical_U(bp), horizontal_lift(bp, f)), 0.0);
}

TEST(MetricH, Errors) {
  const ModelSpace s2(Kind::Sphere2, 1.0);
  const BundlePoint a(s2, e3v({0, 0, 1}), e3v({1, 0, 0}));
  const BundlePoint b(s2, e3v({0, 0, 1}), e3v({0, 1, 0}));
  const AmbientVector y = e3v({0, 1, 0});
  EXPECT_THROW(metric_h(MetricParams(0, 0, 1), vertical_lift(a, y), vertical_lift(b, y)), InvalidInput);
  EXPECT_THROW(metric_h(MetricParams(0, 0, 1, Sign::Indefinite), vertical_lift(a, y), vertical_lift(a, y)), InvalidInput);
  EXPECT_THROW(metric_h(MetricParams(0, 0, 2), vertical_lift(a, y), vertical_lift(a, y)), InvalidInput);
  EXPECT_THROW(MetricParams(0, -1, 1), InvalidInput);
  const ModelSpace h2(Kind::HyperbolicPlane, 1.0);
  const AmbientVector x = m3v({0, 0, 1});
  const BundlePoint big(h2, x, m3v({0.0, 0.0, 0.0}));
  EXPECT_NO_THROW(metric_h(MetricParams(1, 0, 1, Sign::Indefinite), vertical_lift(big, m3v({1, 0, 0})), vertical_lift(big, m3v({1, 0, 0}))));
}

TEST(MetricH, SymmetricAndBilinear) {
  Rng rng(24);
  for (const auto& [kind, sign] : {std::pair{Kind::Sphere2, Sign::Definite}, std::pair{Kind::HyperbolicPlane, Sign::Indefinite}}) {
    const ModelSpace base(kind, 2.0);
    const MetricParams params(1.5, 2.0, 2.0, sign);
    for (int i = 0; i < 100; ++i) {
      const AmbientVector x = sample_point(base, rng);
      const BundlePoint bp(base, x, sample_tangent(base, x, rng));
      const auto tangent = [&] {
        return BundleTangent(bp, sample_tangent(base, x, rng), sample_tangent(base, x, rng));
      };
      const BundleTangent a = tangent(), b = tangent(), d = tangent();
      const double s = rng.uniform(-2.0, 2.0);
      EXPECT_NEAR(metric_h(params, a, b), metric_h(params, b, a), 1e-13);
      EXPECT_NEAR(metric_h(params, a + s * d, b), metric_h(params, a, b) + s * metric_h(params, d, b), 1e-11);
    }
  }
}

TEST(MetricH, UnitBundleValuesIgnoreR) {
  Rng rng(25);
  for (const auto& [kind, sign] : {std::pair{Kind::Sphere2, Sign::Definite}, std::pair{Kind::HyperbolicPlane, Sign::Indefinite}}) {
    const ModelSpace base(kind, 4.0);
    for (int i = 0; i < 200; ++i) {
      const BundlePoint bp = random_unit_point(base, rng);
      const AmbientVector f = orthogonal_unit(bp, rng);
      const auto tangent = [&] {
        return BundleTangent(bp, sample_tangent(base, bp.x(), rng), rng.normal() * f);
      };
      const BundleTangent a = tangent(), b = tangent();
      const double h0 = metric_h(MetricParams(2.0, 0.0, 4.0, sign), a, b);
      for (double r : {1.0, 5.0}) {
        EXPECT_LE(std::abs(metric_h(MetricParams(2.0, r, 4.0, sign), a, b) - h0), 1e-15);
      }
    }
  }
}

TEST(MetricH, IndefiniteUnitBundleHasOneNegativeDirection) {
  Rng rng(26);
  const ModelSpace h2(Kind::HyperbolicPlane, 4.0);
  const MetricParams params(2.0, 1.0, 4.0, Sign::Indefinite);
  for (int i = 0; i < 50; ++i) {
    const BundlePoint bp = random_unit_point(h2, rng);
    const AmbientVector f = orthogonal_unit(bp, rng);
    const std::array<BundleTangent, 3> z = {horizontal_lift(bp, bp.e()), horizontal_lift(bp, f),
                                            vertical_lift(bp, 2.0 * f)};
    Eigen::Matrix3d g;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) g(a, b) = metric_h(params, z[a], z[b]);
    EXPECT_TRUE(g.isApprox(Eigen::Vector3d(1, 1, -1).asDiagonal().toDenseMatrix(), 1e-13));
  }
}

TEST(BergerMetric, Examples) {
  Rng rng(27);
  const ModelSpace s3(Kind::Sphere3, 1.0);
  for (int i = 0; i < 50; ++i) {
    const AmbientVector x = sample_point(s3, rng);
    const FramePoint fp = frame_fields(s3, x);
    const AmbientVector v = sample_tangent(s3, x, rng);
    EXPECT_NEAR(berger_metric(1.0, x, v, v), ambient_dot(v, v), 1e-13);
    EXPECT_NEAR(berger_metric(2.0, x, fp.frame[2], fp.frame[2]), 0.25, 1e-15);
    EXPECT_NEAR(berger_metric(2.0, x, fp.frame[0], fp.frame[2]), 0.0, 1e-15);
  }
  EXPECT_THROW(berger_metric(0.0, e4v({1, 0, 0, 0}), e4v({0, 1, 0, 0}), e4v({0, 1, 0, 0})), InvalidInput);
  EXPECT_THROW(berger_metric(1.0, e4v({1, 0, 0, 0}), e4v({1, 0, 0, 0}), e4v({0, 1, 0, 0})), InvalidInput);
}

TEST(CanonicalU, IsTheVerticalLiftOfE) {
  const ModelSpace s2(Kind::Sphere2, 1.0);
  const BundlePoint bp(s2, e3v({0, 0, 1}), e3v({0.6, 0.8, 0}));
  const BundleTangent u = canonical_vertical_U(bp);
  EXPECT_TRUE(near(u.X, e3v({0, 0, 0}), 0.0));
  EXPECT_TRUE(near(u.Y, bp.e(), 0.0));
}
