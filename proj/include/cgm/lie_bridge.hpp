#pragma once

#include <Eigen/Core>
#include <array>
#include <complex>

#include "cgm/ambient.hpp"
#include "cgm/bundle.hpp"

namespace cgm {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;

enum class GroupKind { SU2, SU11 };

// Element of SU(2) = {(a, -conj b; b, conj a)} or SU(1,1) = {(a, conj b; b, conj a)},
// stored by its first column.
struct GroupElement {
  Complex a;
  Complex b;
  GroupKind kind;

  Matrix2c matrix() const;
  static GroupElement from_matrix(const Matrix2c& m, GroupKind kind);
  static GroupElement identity(GroupKind kind) { return {1.0, 0.0, kind}; }

  // |a|^2 + |b|^2 - 1 or |a|^2 - |b|^2 - 1.
  double constraint_residual() const;

  GroupElement operator-() const { return {-a, -b, kind}; }
};

GroupElement operator*(const GroupElement& g, const GroupElement& h);

// Orthonormal basis of su(2) under -Tr(XY)/2, or pseudo-orthonormal basis of
// su(1,1) under Tr(XY)/2 with e3 timelike.
struct LieBasis {
  std::array<Matrix2c, 3> e;
  GroupKind kind;

  static const LieBasis& of(GroupKind kind);
  double inner(const Matrix2c& x, const Matrix2c& y) const;
  // Coordinates of an algebra element in (e1, e2, e3).
  Eigen::Vector3d coordinates(const Matrix2c& x) const;
};

struct RotationMatrix {
  enum class Kind { SO3, SO12plus };

  Eigen::Matrix3d entries;
  Kind kind;

  // J = identity for SO3, diag(1, 1, -1) for SO12plus.
  Eigen::Matrix3d form() const;
  // max |M^T J M - J|.
  double orthogonality_residual() const;
  bool is_valid(double tol = 1e-12) const;
  Eigen::Vector3d column(int i) const { return entries.col(i); }
};

// psi: unit S^3 -> SU(2) or H^3_1(1) -> SU(1,1); the kind follows the
// signature of x.
GroupElement psi(const AmbientVector& x);

// Adjoint representation from the explicit entry formulas.
RotationMatrix rho(const GroupElement& g);
// Same map from the column form (A e_i A^-1) expanded in the basis.
RotationMatrix rho_by_columns(const GroupElement& g);

// (c3 / sqrt(c), c1) in T^1 S^2(c) or T^1 H^2(c).
BundlePoint phi(const RotationMatrix& rot, double c);

// Source quadric of the covering map at scale c: S^3(c/4) for a (4,0) point,
// H^3_1(c/4) for a (2,2) point.
ModelSpace covering_source(const AmbientVector& p, double c);

// F = phi o rho o psi o iota.
BundlePoint covering_F(const AmbientVector& p, double c);

// (1/sqrt c)(2 Re z1 conj z2, 2 Im z1 conj z2, |z1|^2 -+ |z2|^2).
AmbientVector hopf(const AmbientVector& p, double c);

// The three raw tangent vectors e~1, e~2, e~3 at F(p), as ambient derivatives.
std::array<CurveDatum, 3> tilde_frame(const AmbientVector& p, double c);

// Differential of F in raw ambient form and split into (X, Y).
CurveDatum dF_closed_raw(const AmbientVector& p, double c, const AmbientVector& v);
BundleTangent dF_closed(const AmbientVector& p, double c, const AmbientVector& v);

// f = -A e2 A^-1: the unit vector completing (e, f) at F(p).
AmbientVector companion_f(const AmbientVector& p, double c);

}  // namespace cgm
