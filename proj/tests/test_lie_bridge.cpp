#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/LU>

#include "cgm/errors.hpp"
#include "cgm/fd_oracle.hpp"
#include "cgm/lie_bridge.hpp"
#include "support.hpp"

using namespace cgm;
using namespace cgm::testing;
using Kind = ModelSpace::Kind;

namespace {

const Complex kI{0.0, 1.0};

GroupElement random_element(GroupKind kind, Rng& rng) {
  const ModelSpace space(kind == GroupKind::SU2 ? Kind::Sphere3 : Kind::AntiDeSitter3, 1.0);
  return psi(sample_point(space, rng));
}

double max_abs(const Matrix2c& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(LieBasis, PseudoOrthonormal) {
  for (const auto& [kind, sign3] : {std::pair{GroupKind::SU2, 1.0}, std::pair{GroupKind::SU11, -1.0}}) {
    const LieBasis& b = LieBasis::of(kind);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double expected = i != j ? 0.0 : (i == 2 ? sign3 : 1.0);
        EXPECT_NEAR(b.inner(b.e[i], b.e[j]), expected, 1e-15);
      }
      EXPECT_TRUE(b.coordinates(b.e[i]).isApprox(Eigen::Vector3d::Unit(i)));
    }
  }
}

TEST(Psi, Examples) {
  const GroupElement id = psi(e4v({1, 0, 0, 0}));
  EXPECT_EQ(id.a, Complex(1.0));
  EXPECT_EQ(id.b, Complex(0.0));
  const Matrix2c& e3 = LieBasis::of(GroupKind::SU2).e[2];
  EXPECT_EQ(max_abs(psi(e4v({0, 1, 0, 0})).matrix() - e3), 0.0);
  const GroupElement h = psi(n4v({0, 0, 1, 0}));
  EXPECT_EQ(h.kind, GroupKind::SU11);
  EXPECT_EQ(max_abs(h.matrix() - LieBasis::of(GroupKind::SU11).e[2]), 0.0);
}

TEST(Psi, MatchesMatrixDefinitionInBothKinds) {
  Rng rng(1);
  const ModelSpace ads(Kind::AntiDeSitter3, 1.0);
  for (int i = 0; i < 100; ++i) {
    const AmbientVector x = sample_point(ads, rng);
    const Complex z1(x[0], x[1]), z2(x[2], x[3]);
    Matrix2c expected;
    expected << kI * std::conj(z2), -kI * z1, kI * std::conj(z1), -kI * z2;
    const GroupElement g = psi(x);
    EXPECT_LE(max_abs(g.matrix() - expected), 1e-15);
    EXPECT_NEAR(g.constraint_residual(), 0.0, 1e-12);
  }
}

TEST(Psi, RejectsOffManifoldPoints) {
  EXPECT_THROW(psi(e4v({1, 1, 0, 0})), InvalidInput);
  EXPECT_THROW(psi(e3v({1, 0, 0})), InvalidInput);
}

TEST(Rho, Examples) {
  EXPECT_TRUE(rho(GroupElement::identity(GroupKind::SU2)).entries.isIdentity(0.0));
  EXPECT_TRUE(rho(GroupElement::identity(GroupKind::SU11)).entries.isIdentity(0.0));
  const Eigen::Matrix3d r = rho(psi(e4v({0, 1, 0, 0}))).entries;
  EXPECT_TRUE(r.isApprox(Eigen::Vector3d(-1, -1, 1).asDiagonal().toDenseMatrix()));
}

TEST(Rho, KernelIsPlusMinusIdentity) {
  Rng rng(2);
  for (const GroupKind kind : {GroupKind::SU2, GroupKind::SU11}) {
    for (int i = 0; i < 100; ++i) {
      const GroupElement g = random_element(kind, rng);
      EXPECT_LE((rho(g).entries - rho(-g).entries).cwiseAbs().maxCoeff(), 1e-15);
    }
  }
}

TEST(Rho, ExplicitEntriesEqualColumnForm) {
  Rng rng(3);
  for (const GroupKind kind : {GroupKind::SU2, GroupKind::SU11}) {
    for (int i = 0; i < 200; ++i) {
      const GroupElement g = random_element(kind, rng);
      const double scale = std::max(1.0, rho(g).entries.cwiseAbs().maxCoeff());
      EXPECT_LE((rho(g).entries - rho_by_columns(g).entries).cwiseAbs().maxCoeff(), 1e-13 * scale);
    }
  }
}

TEST(Rho, HomomorphismAndGroupInvariants) {
  Rng rng(4);
  for (const GroupKind kind : {GroupKind::SU2, GroupKind::SU11}) {
    for (int i = 0; i < 200; ++i) {
      const GroupElement a = random_element(kind, rng);
      const GroupElement b = random_element(kind, rng);
      const Eigen::Matrix3d ab = rho(a * b).entries;
      const double scale = std::max(1.0, ab.cwiseAbs().maxCoeff());
      EXPECT_LE((ab - rho(a).entries * rho(b).entries).cwiseAbs().maxCoeff(), 1e-12 * scale);
      const RotationMatrix r = rho(a);
      EXPECT_LE(r.orthogonality_residual(), 1e-12 * scale * scale);
      EXPECT_NEAR(r.entries.determinant(), 1.0, 1e-12 * std::pow(scale, 3));
      if (kind == GroupKind::SU11) EXPECT_GT(r.entries(2, 2), 0.0);
    }
  }
}

TEST(Phi, Examples) {
  const RotationMatrix id3{Eigen::Matrix3d::Identity(), RotationMatrix::Kind::SO3};
  BundlePoint bp = phi(id3, 4.0);
  EXPECT_TRUE(near(bp.x(), e3v({0, 0, 0.5}), 0.0));
  EXPECT_TRUE(near(bp.e(), e3v({1, 0, 0}), 0.0));
  const RotationMatrix flip{Eigen::Vector3d(-1, -1, 1).asDiagonal(), RotationMatrix::Kind::SO3};
  bp = phi(flip, 4.0);
  EXPECT_TRUE(near(bp.x(), e3v({0, 0, 0.5}), 0.0));
  EXPECT_TRUE(near(bp.e(), e3v({-1, 0, 0}), 0.0));
  const RotationMatrix id12{Eigen::Matrix3d::Identity(), RotationMatrix::Kind::SO12plus};
  bp = phi(id12, 1.0);
  EXPECT_TRUE(near(bp.x(), m3v({0, 0, 1}), 0.0));
  EXPECT_TRUE(near(bp.e(), m3v({1, 0, 0}), 0.0));
}

TEST(CoveringF, Examples) {
  BundlePoint bp = covering_F(e4v({1, 0, 0, 0}), 4.0);
  EXPECT_TRUE(near(bp.x(), e3v({0, 0, 0.5}), 1e-15));
  EXPECT_TRUE(near(bp.e(), e3v({1, 0, 0}), 1e-15));
  bp = covering_F(n4v({0, 0, 1, 0}), 4.0);
  EXPECT_TRUE(near(bp.x(), m3v({0, 0, 0.5}), 1e-15));
  EXPECT_TRUE(near(bp.e(), m3v({-1, 0, 0}), 1e-15));
  EXPECT_TRUE(bp.is_unit());
}

TEST(CoveringF, TwoToOne) {
  Rng rng(5);
  for (const Kind kind : {Kind::Sphere3, Kind::AntiDeSitter3}) {
    const ModelSpace source(kind, 1.0);
    for (int i = 0; i < 100; ++i) {
      const AmbientVector p = sample_point(source, rng);
      const BundlePoint a = covering_F(p, 4.0);
      const BundlePoint b = covering_F(-p, 4.0);
      EXPECT_TRUE(near(a.x(), b.x(), 1e-14));
      EXPECT_TRUE(near(a.e(), b.e(), 1e-14));
      EXPECT_TRUE(a.is_unit(1e-12));
    }
  }
}

TEST(CoveringF, RejectsPointsOffSource) {
  EXPECT_THROW(covering_F(e4v({1, 0, 0, 0}), 1.0), InvalidInput);
}

TEST(Hopf, Examples) {
  EXPECT_TRUE(near(hopf(e4v({1, 0, 0, 0}), 4.0), e3v({0, 0, 0.5}), 0.0));
  EXPECT_TRUE(near(hopf(n4v({0, 0, 1, 0}), 4.0), m3v({0, 0, 0.5}), 0.0));
}

TEST(Hopf, PhaseInvariantAndEqualsProjectionOfF) {
  Rng rng(6);
  for (const Kind kind : {Kind::Sphere3, Kind::AntiDeSitter3}) {
    for (double c : {1.0, 4.0, 9.0}) {
      const ModelSpace source(kind, c / 4.0);
      for (int i = 0; i < 100; ++i) {
        const AmbientVector p = sample_point(source, rng);
        EXPECT_TRUE(near(hopf(p, c), covering_F(p, c).x(), 1e-14));
        for (double t : {std::numbers::pi / 3, 1.0}) {
          const Complex w = std::polar(1.0, t);
          const Complex z1 = w * Complex(p[0], p[1]);
          const Complex z2 = w * Complex(p[2], p[3]);
          const AmbientVector q({z1.real(), z1.imag(), z2.real(), z2.imag()}, p.signature());
          EXPECT_TRUE(near(hopf(q, c), hopf(p, c), 1e-14));
        }
      }
    }
  }
}

TEST(DFClosed, SphereExamples) {
  const AmbientVector p = e4v({1, 0, 0, 0});
  const FramePoint fp = frame_fields(ModelSpace(Kind::Sphere3, 1.0), p);
  const BundleTangent z3 = dF_closed(p, 4.0, fp.frame[2]);
  EXPECT_TRUE(near(z3.X, e3v({0, 0, 0}), 0.0));
  EXPECT_TRUE(near(z3.Y, e3v({0, 2, 0}), 1e-15));
  const BundleTangent z1 = dF_closed(p, 4.0, fp.frame[0]);
  EXPECT_TRUE(near(z1.X, e3v({0, -1, 0}), 1e-15));
  EXPECT_TRUE(near(z1.Y, e3v({0, 0, 0}), 0.0));
  const BundleTangent z0 = dF_closed(p, 4.0, e4v({0, 0, 0, 0}));
  EXPECT_EQ(z0.X.max_abs(), 0.0);
  EXPECT_EQ(z0.Y.max_abs(), 0.0);
}

TEST(DFClosed, RejectsNonTangentVectors) {
  EXPECT_THROW(dF_closed(e4v({1, 0, 0, 0}), 4.0, e4v({1, 0, 0, 0})), InvalidInput);
}

TEST(DFClosed, AgreesWithNumericDifferential) {
  Rng rng(7);
  for (const Kind kind : {Kind::Sphere3, Kind::AntiDeSitter3}) {
    for (double c : {1.0, 4.0}) {
      const ModelSpace source(kind, c / 4.0);
      const auto F = [c](const AmbientVector& q) { return covering_F(q, c); };
      for (int i = 0; i < 200; ++i) {
        const AmbientVector p = sample_point(source, rng);
        const AmbientVector v = sample_tangent(source, p, rng);
        const BundleTangent z = dF_closed(p, c, v);
        const double scale = std::max({1.0, z.X.max_abs(), z.Y.max_abs()});
        EXPECT_TRUE(near(z, differential_fd(F, source, p, v), 1e-6 * scale));
      }
    }
  }
}
