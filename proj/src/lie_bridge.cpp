#include "cgm/lie_bridge.hpp"

#include <Eigen/LU>
#include <cmath>

#include "cgm/errors.hpp"
#include "cgm/model_spaces.hpp"

namespace cgm {

namespace {

constexpr Complex kI{0.0, 1.0};

GroupKind kind_of(const AmbientVector& x) {
  if (x.signature() == kEuclidean4) return GroupKind::SU2;
  if (x.signature() == kNeutral4) return GroupKind::SU11;
  throw InvalidInput("expected a point of R^4 or R^4_2");
}

ModelSpace unit_model(GroupKind kind) {
  return kind == GroupKind::SU2 ? ModelSpace(ModelSpace::Kind::Sphere3, 1.0)
                                : ModelSpace(ModelSpace::Kind::AntiDeSitter3, 1.0);
}

ModelSpace base_of(GroupKind kind, double c) {
  return kind == GroupKind::SU2 ? ModelSpace(ModelSpace::Kind::Sphere2, c)
                                : ModelSpace(ModelSpace::Kind::HyperbolicPlane, c);
}

AmbientVector to_ambient(const Eigen::Vector3d& v, GroupKind kind) {
  return AmbientVector(v, kind == GroupKind::SU2 ? kEuclidean3 : kMinkowski3);
}

// z1 = x1 + i x2, z2 = x3 + i x4 recovered from the group element.
std::pair<Complex, Complex> point_of(const GroupElement& g) {
  if (g.kind == GroupKind::SU2) return {g.a, g.b};
  // a = i conj z2, b = i conj z1.
  return {kI * std::conj(g.b), kI * std::conj(g.a)};
}

struct Lifted {
  GroupKind kind;
  ModelSpace source;
  AmbientVector unit_point;  // iota(p)
  RotationMatrix rot;
};

Lifted lift(const AmbientVector& p, double c) {
  const ModelSpace source = covering_source(p, c);
  if (!contains(source, p)) throw InvalidInput("covering map: point is off the source quadric");
  const AmbientVector x = p * (std::sqrt(c) / 2.0);
  const GroupElement g = psi(x);
  return {g.kind, source, x, rho(g)};
}

}  // namespace

Matrix2c GroupElement::matrix() const {
  Matrix2c m;
  if (kind == GroupKind::SU2) {
    m << a, -std::conj(b), b, std::conj(a);
  } else {
    m << a, std::conj(b), b, std::conj(a);
  }
  return m;
}

GroupElement GroupElement::from_matrix(const Matrix2c& m, GroupKind kind) {
  return {m(0, 0), m(1, 0), kind};
}

double GroupElement::constraint_residual() const {
  const double s = kind == GroupKind::SU2 ? 1.0 : -1.0;
  return std::norm(a) + s * std::norm(b) - 1.0;
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  if (g.kind != h.kind) throw InvalidInput("group elements of different kinds");
  return GroupElement::from_matrix(g.matrix() * h.matrix(), g.kind);
}

const LieBasis& LieBasis::of(GroupKind kind) {
  static const LieBasis su2 = [] {
    LieBasis b{{}, GroupKind::SU2};
    b.e[0] << 0.0, kI, kI, 0.0;
    b.e[1] << 0.0, -1.0, 1.0, 0.0;
    b.e[2] << kI, 0.0, 0.0, -kI;
    return b;
  }();
  static const LieBasis su11 = [] {
    LieBasis b{{}, GroupKind::SU11};
    b.e[0] << 0.0, -kI, kI, 0.0;
    b.e[1] << 0.0, 1.0, 1.0, 0.0;
    b.e[2] << kI, 0.0, 0.0, -kI;
    return b;
  }();
  return kind == GroupKind::SU2 ? su2 : su11;
}

double LieBasis::inner(const Matrix2c& x, const Matrix2c& y) const {
  const double s = kind == GroupKind::SU2 ? -0.5 : 0.5;
  return s * (x * y).trace().real();
}

Eigen::Vector3d LieBasis::coordinates(const Matrix2c& x) const {
  // Both algebras share the lower-left entry x2 + i x1 and diagonal i x3.
  return {x(1, 0).imag(), x(1, 0).real(), x(0, 0).imag()};
}

Eigen::Matrix3d RotationMatrix::form() const {
  Eigen::Matrix3d j = Eigen::Matrix3d::Identity();
  if (kind == Kind::SO12plus) j(2, 2) = -1.0;
  return j;
}

double RotationMatrix::orthogonality_residual() const {
  const Eigen::Matrix3d j = form();
  return (entries.transpose() * j * entries - j).cwiseAbs().maxCoeff();
}

bool RotationMatrix::is_valid(double tol) const {
  if (orthogonality_residual() > tol) return false;
  if (std::abs(entries.determinant() - 1.0) > tol) return false;
  return kind == Kind::SO3 || entries(2, 2) > 0.0;
}

GroupElement psi(const AmbientVector& x) {
  const GroupKind kind = kind_of(x);
  if (!contains(unit_model(kind), x, 1e-10)) {
    throw InvalidInput("psi: point is not on the unit model space");
  }
  const Complex z1(x[0], x[1]);
  const Complex z2(x[2], x[3]);
  if (kind == GroupKind::SU2) return {z1, z2, kind};
  // i (conj z2, -z1; conj z1, -z2)
  return {kI * std::conj(z2), kI * std::conj(z1), kind};
}

RotationMatrix rho(const GroupElement& g) {
  const auto [z1, z2] = point_of(g);
  const Complex z1s = z1 * z1;
  const Complex z2cs = std::conj(z2) * std::conj(z2);
  const Complex z1z2 = z1 * z2;
  const Complex z1cz2 = z1 * std::conj(z2);
  Eigen::Matrix3d m;
  if (g.kind == GroupKind::SU2) {
    const Complex z1cs = std::conj(z1) * std::conj(z1);
    const Complex z2s = z2 * z2;
    m << (z1s - z2cs).real(), (z1cs + z2s).imag(), 2.0 * z1cz2.real(),
        (z1s - z2cs).imag(), (z1cs + z2s).real(), 2.0 * z1cz2.imag(),
        -2.0 * z1z2.real(), 2.0 * z1z2.imag(), std::norm(z1) - std::norm(z2);
    return {m, RotationMatrix::Kind::SO3};
  }
  m << -(z1s + z2cs).real(), -(z1s - z2cs).imag(), 2.0 * z1cz2.real(),
      -(z1s + z2cs).imag(), (z1s - z2cs).real(), 2.0 * z1cz2.imag(),
      -2.0 * z1z2.real(), -2.0 * z1z2.imag(), std::norm(z1) + std::norm(z2);
  return {m, RotationMatrix::Kind::SO12plus};
}

RotationMatrix rho_by_columns(const GroupElement& g) {
  const LieBasis& basis = LieBasis::of(g.kind);
  const Matrix2c a = g.matrix();
  const Matrix2c a_inv = a.inverse();
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i) m.col(i) = basis.coordinates(a * basis.e[i] * a_inv);
  return {m, g.kind == GroupKind::SU2 ? RotationMatrix::Kind::SO3
                                      : RotationMatrix::Kind::SO12plus};
}

BundlePoint phi(const RotationMatrix& rot, double c) {
  const GroupKind kind =
      rot.kind == RotationMatrix::Kind::SO3 ? GroupKind::SU2 : GroupKind::SU11;
  return BundlePoint(base_of(kind, c), to_ambient(rot.column(2) / std::sqrt(c), kind),
                     to_ambient(rot.column(0), kind));
}

ModelSpace covering_source(const AmbientVector& p, double c) {
  return kind_of(p) == GroupKind::SU2 ? ModelSpace(ModelSpace::Kind::Sphere3, c / 4.0)
                                      : ModelSpace(ModelSpace::Kind::AntiDeSitter3, c / 4.0);
}

BundlePoint covering_F(const AmbientVector& p, double c) {
  const Lifted l = lift(p, c);
  return phi(l.rot, c);
}

AmbientVector hopf(const AmbientVector& p, double c) {
  const ModelSpace source = covering_source(p, c);
  if (!contains(source, p)) throw InvalidInput("hopf: point is off the source quadric");
  const AmbientVector x = p * (std::sqrt(c) / 2.0);
  const Complex z1(x[0], x[1]);
  const Complex z2(x[2], x[3]);
  const Complex w = 2.0 * z1 * std::conj(z2);
  const GroupKind kind = kind_of(p);
  const double height =
      kind == GroupKind::SU2 ? std::norm(z1) - std::norm(z2) : std::norm(z1) + std::norm(z2);
  return to_ambient(Eigen::Vector3d(w.real(), w.imag(), height) / std::sqrt(c), kind);
}

std::array<CurveDatum, 3> tilde_frame(const AmbientVector& p, double c) {
  const Lifted l = lift(p, c);
  const AmbientVector c1 = to_ambient(l.rot.column(0), l.kind);
  const AmbientVector c2 = to_ambient(l.rot.column(1), l.kind);
  const AmbientVector c3 = to_ambient(l.rot.column(2), l.kind);
  const AmbientVector zero = AmbientVector::zero(c1.signature());
  const double k = std::sqrt(c);
  // e~2 carries -2 A e3 A^-1 over the sphere and +2 A e3 A^-1 over H^2.
  const double s = l.kind == GroupKind::SU2 ? -2.0 : 2.0;
  return {CurveDatum{(-2.0 / k) * c2, zero}, CurveDatum{(2.0 / k) * c1, s * c3},
          CurveDatum{zero, 2.0 * c2}};
}

CurveDatum dF_closed_raw(const AmbientVector& p, double c, const AmbientVector& v) {
  const ModelSpace source = covering_source(p, c);
  if (!contains(source, p)) throw InvalidInput("dF_closed: point is off the source quadric");
  if (!(v.signature() == p.signature()) || !is_tangent(source, p, v)) {
    throw InvalidInput("dF_closed: vector is not tangent to the source");
  }
  const FramePoint fp = frame_fields(source, p);
  const auto tilde = tilde_frame(p, c);
  // Over H^3_1, dpsi(X2) = -A e2 and dpsi(X3) = -A e3, so those two images
  // are -e~2 and -e~3.
  const bool hyperbolic = !source.is_spherical();
  const std::array<double, 3> orientation = {1.0, hyperbolic ? -1.0 : 1.0,
                                             hyperbolic ? -1.0 : 1.0};
  const double k = std::sqrt(c);
  CurveDatum out{AmbientVector::zero(tilde[0].xdot.signature()),
                 AmbientVector::zero(tilde[0].xdot.signature())};
  for (int i = 0; i < 3; ++i) {
    const double norm = ambient_dot(fp.frame[i], fp.frame[i]);  // +-1
    // v = sum coef_i (2 X_i / sqrt c)
    const double coef = ambient_dot(v, fp.frame[i]) / norm * (k / 2.0) * orientation[i];
    out.xdot += coef * tilde[i].xdot;
    out.edot += coef * tilde[i].edot;
  }
  return out;
}

BundleTangent dF_closed(const AmbientVector& p, double c, const AmbientVector& v) {
  return split_tangential(covering_F(p, c), dF_closed_raw(p, c, v));
}

AmbientVector companion_f(const AmbientVector& p, double c) {
  const Lifted l = lift(p, c);
  return to_ambient(-l.rot.column(1), l.kind);
}

}  // namespace cgm
