#pragma once

#include <array>
#include <complex>

#include "cgm/ambient.hpp"
#include "cgm/rng.hpp"

namespace cgm {

// Embedded constant-curvature quadrics. Spheres sit at <x,x> = 1/c and have
// sectional curvature +c; the hyperbolic kinds sit at <x,x> = -1/c and have
// curvature -c.
class ModelSpace {
 public:
  enum class Kind { Sphere2, Sphere3, HyperbolicPlane, AntiDeSitter3 };

  ModelSpace(Kind kind, double c);

  Kind kind() const { return kind_; }
  double c() const { return c_; }
  Signature signature() const;
  int dim() const;  // intrinsic dimension, 2 or 3
  bool is_spherical() const { return kind_ == Kind::Sphere2 || kind_ == Kind::Sphere3; }
  // Value of <x,x> on the quadric.
  double quadric_level() const { return (is_spherical() ? 1.0 : -1.0) / c_; }
  // +1 for spheres, -1 for hyperbolic kinds.
  double curvature_sign() const { return is_spherical() ? 1.0 : -1.0; }

  bool operator==(const ModelSpace&) const = default;

 private:
  Kind kind_;
  double c_;
};

const char* to_string(ModelSpace::Kind kind);

inline constexpr double kContainsTol = 1e-12;
inline constexpr double kTangentTol = 1e-9;

// Global (pseudo-)orthonormal frame of S^3 or H^3_1 at x.
struct FramePoint {
  AmbientVector x;
  std::array<AmbientVector, 3> frame;  // X1, X2, X3
};

bool contains(const ModelSpace& space, const AmbientVector& x, double tol = kContainsTol);

// True iff <x,v> vanishes relative to the scale of the quadric.
bool is_tangent(const ModelSpace& space, const AmbientVector& x, const AmbientVector& v,
                double tol = kTangentTol);

// Orthogonal projection of an ambient vector onto T_x.
AmbientVector project_tangent(const ModelSpace& space, const AmbientVector& x,
                              const AmbientVector& w);

// Radial rescaling of a nearby ambient point back onto the quadric.
AmbientVector retract(const ModelSpace& space, const AmbientVector& x);

FramePoint frame_fields(const ModelSpace& space, const AmbientVector& x);

// Unit-speed geodesic through x with spacelike unit initial velocity v.
AmbientVector geodesic(const ModelSpace& space, const AmbientVector& x, const AmbientVector& v,
                       double t);
AmbientVector geodesic_velocity(const ModelSpace& space, const AmbientVector& x,
                                const AmbientVector& v, double t);

AmbientVector exp_map(const ModelSpace& space, const AmbientVector& x, const AmbientVector& w);

// Parallel transport of w (tangent at x) along geodesic(x, v, .) to time t.
AmbientVector parallel_transport(const ModelSpace& space, const AmbientVector& x,
                                 const AmbientVector& v, const AmbientVector& w, double t);

// Parallel transport of w in T_from to T_to along the unique minimizing
// geodesic arc. Undefined for antipodal points of a sphere.
AmbientVector transport_between(const ModelSpace& space, const AmbientVector& from,
                                const AmbientVector& to, const AmbientVector& w);

AmbientVector stereographic_inverse(const ModelSpace& space, std::complex<double> zeta);

// Random points and tangent vectors for property checks.
AmbientVector sample_point(const ModelSpace& space, Rng& rng);
AmbientVector sample_tangent(const ModelSpace& space, const AmbientVector& x, Rng& rng);
// Spacelike unit tangent vector.
AmbientVector sample_unit_tangent(const ModelSpace& space, const AmbientVector& x, Rng& rng);

}  // namespace cgm
