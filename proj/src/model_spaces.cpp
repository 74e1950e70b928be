#include "cgm/model_spaces.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cgm/errors.hpp"

namespace cgm {

namespace {

using Kind = ModelSpace::Kind;

void require_signature(const ModelSpace& space, const AmbientVector& x) {
  if (!(x.signature() == space.signature())) {
    throw InvalidInput(std::string("signature does not match ") + to_string(space.kind()));
  }
}

void require_on(const ModelSpace& space, const AmbientVector& x) {
  if (!contains(space, x)) {
    throw InvalidInput(std::string("point is not on ") + to_string(space.kind()));
  }
}

void require_unit_tangent(const ModelSpace& space, const AmbientVector& x,
                          const AmbientVector& v) {
  require_signature(space, v);
  if (!is_tangent(space, x, v) || std::abs(ambient_dot(v, v) - 1.0) > kTangentTol) {
    throw InvalidInput("initial velocity must be a spacelike unit tangent vector");
  }
}

// sin(z)/z and sinh(z)/z with a series branch near zero.
double sinc(double z) {
  if (std::abs(z) < 1e-8) return 1.0 - z * z / 6.0;
  return std::sin(z) / z;
}

double sinhc(double z) {
  if (std::abs(z) < 1e-8) return 1.0 + z * z / 6.0;
  return std::sinh(z) / z;
}

}  // namespace

ModelSpace::ModelSpace(Kind kind, double c) : kind_(kind), c_(c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw InvalidInput("curvature scale c must be positive");
}

Signature ModelSpace::signature() const {
  switch (kind_) {
    case Kind::Sphere2: return kEuclidean3;
    case Kind::Sphere3: return kEuclidean4;
    case Kind::HyperbolicPlane: return kMinkowski3;
    case Kind::AntiDeSitter3: return kNeutral4;
  }
  return {};
}

int ModelSpace::dim() const {
  return (kind_ == Kind::Sphere2 || kind_ == Kind::HyperbolicPlane) ? 2 : 3;
}

const char* to_string(ModelSpace::Kind kind) {
  switch (kind) {
    case Kind::Sphere2: return "Sphere2";
    case Kind::Sphere3: return "Sphere3";
    case Kind::HyperbolicPlane: return "HyperbolicPlane";
    case Kind::AntiDeSitter3: return "AntiDeSitter3";
  }
  return "?";
}

bool contains(const ModelSpace& space, const AmbientVector& x, double tol) {
  require_signature(space, x);
  if (std::abs(ambient_dot(x, x) - space.quadric_level()) > tol) return false;
  if (space.kind() == Kind::HyperbolicPlane && !(x[2] > 0.0)) return false;
  return true;
}

bool is_tangent(const ModelSpace& space, const AmbientVector& x, const AmbientVector& v,
                double tol) {
  require_signature(space, v);
  // x has size 1/sqrt(c); normalize so the test is scale free.
  const double scale = std::max(1.0, v.max_abs());
  return std::abs(ambient_dot(x, v)) * std::sqrt(space.c()) <= tol * scale;
}

AmbientVector project_tangent(const ModelSpace& space, const AmbientVector& x,
                              const AmbientVector& w) {
  require_signature(space, w);
  return w - (ambient_dot(w, x) / ambient_dot(x, x)) * x;
}

AmbientVector retract(const ModelSpace& space, const AmbientVector& x) {
  require_signature(space, x);
  const double q = ambient_dot(x, x);
  if (space.is_spherical() ? !(q > 0.0) : !(q < 0.0)) {
    throw DomainError("point is too far from the quadric to retract");
  }
  AmbientVector y = x / std::sqrt(std::abs(q) * space.c());
  if (space.kind() == Kind::HyperbolicPlane && y[2] < 0.0) y = -y;
  return y;
}

FramePoint frame_fields(const ModelSpace& space, const AmbientVector& x) {
  if (space.kind() != Kind::Sphere3 && space.kind() != Kind::AntiDeSitter3) {
    throw InvalidInput("frame fields exist only on Sphere3 and AntiDeSitter3");
  }
  require_on(space, x);
  const AmbientVector u = x * std::sqrt(space.c());
  const Signature sig = space.signature();
  FramePoint fp{x, {}};
  if (space.kind() == Kind::Sphere3) {
    fp.frame[0] = AmbientVector({-u[3], -u[2], u[1], u[0]}, sig);
    fp.frame[1] = AmbientVector({-u[2], u[3], u[0], -u[1]}, sig);
  } else {
    fp.frame[0] = AmbientVector({u[3], u[2], u[1], u[0]}, sig);
    fp.frame[1] = AmbientVector({u[2], -u[3], u[0], -u[1]}, sig);
  }
  fp.frame[2] = AmbientVector({-u[1], u[0], -u[3], u[2]}, sig);
  return fp;
}

AmbientVector geodesic(const ModelSpace& space, const AmbientVector& x, const AmbientVector& v,
                       double t) {
  require_on(space, x);
  require_unit_tangent(space, x, v);
  const double k = std::sqrt(space.c());
  if (space.is_spherical()) return std::cos(k * t) * x + (std::sin(k * t) / k) * v;
  return std::cosh(k * t) * x + (std::sinh(k * t) / k) * v;
}

AmbientVector geodesic_velocity(const ModelSpace& space, const AmbientVector& x,
                                const AmbientVector& v, double t) {
  require_on(space, x);
  require_unit_tangent(space, x, v);
  const double k = std::sqrt(space.c());
  if (space.is_spherical()) return (-k * std::sin(k * t)) * x + std::cos(k * t) * v;
  return (k * std::sinh(k * t)) * x + std::cosh(k * t) * v;
}

AmbientVector exp_map(const ModelSpace& space, const AmbientVector& x, const AmbientVector& w) {
  if (space.kind() != Kind::Sphere2 && space.kind() != Kind::HyperbolicPlane) {
    throw InvalidInput("exp_map is provided for Sphere2 and HyperbolicPlane");
  }
  require_on(space, x);
  require_signature(space, w);
  if (!is_tangent(space, x, w)) throw InvalidInput("exp_map: vector is not tangent");
  // Tangent planes of both kinds are positive definite.
  const double s = std::sqrt(std::max(0.0, ambient_dot(w, w)));
  const double z = std::sqrt(space.c()) * s;
  if (space.is_spherical()) return std::cos(z) * x + sinc(z) * w;
  return std::cosh(z) * x + sinhc(z) * w;
}

AmbientVector parallel_transport(const ModelSpace& space, const AmbientVector& x,
                                 const AmbientVector& v, const AmbientVector& w, double t) {
  require_signature(space, w);
  if (!is_tangent(space, x, w)) throw InvalidInput("parallel_transport: w is not tangent");
  const double along = ambient_dot(w, v);
  // The component normal to span(x, v) is constant along the geodesic.
  return along * geodesic_velocity(space, x, v, t) + (w - along * v);
}

AmbientVector transport_between(const ModelSpace& space, const AmbientVector& from,
                                const AmbientVector& to, const AmbientVector& w) {
  require_signature(space, from);
  require_signature(space, to);
  require_signature(space, w);
  const double denom = ambient_dot(to, to) + ambient_dot(to, from);
  if (std::abs(denom) * space.c() < 1e-12) {
    throw DomainError("transport_between: points are antipodal");
  }
  return w - (ambient_dot(w, to) / denom) * (to + from);
}

AmbientVector stereographic_inverse(const ModelSpace& space, std::complex<double> zeta) {
  const double k = std::sqrt(space.c());
  const double n2 = std::norm(zeta);
  switch (space.kind()) {
    case Kind::Sphere2: {
      const double d = n2 + 1.0;
      return AmbientVector({2.0 * zeta.real() / d, 2.0 * zeta.imag() / d, (n2 - 1.0) / d},
                           kEuclidean3) /
             k;
    }
    case Kind::HyperbolicPlane: {
      if (!(n2 < 1.0)) throw DomainError("stereographic_inverse: |zeta| must be < 1");
      const double d = 1.0 - n2;
      return AmbientVector({2.0 * zeta.real() / d, 2.0 * zeta.imag() / d, (1.0 + n2) / d},
                           kMinkowski3) /
             k;
    }
    default:
      throw InvalidInput("stereographic_inverse is provided for Sphere2 and HyperbolicPlane");
  }
}

AmbientVector sample_point(const ModelSpace& space, Rng& rng) {
  const double k = std::sqrt(space.c());
  switch (space.kind()) {
    case Kind::Sphere2:
    case Kind::Sphere3: {
      AmbientVector::Storage g(space.signature().dim());
      do {
        for (int i = 0; i < g.size(); ++i) g[i] = rng.normal();
      } while (g.norm() < 1e-6);
      return AmbientVector(g / (g.norm() * k), space.signature());
    }
    case Kind::HyperbolicPlane: {
      const double a = rng.normal() / k;
      const double b = rng.normal() / k;
      return AmbientVector({a, b, std::sqrt(1.0 / space.c() + a * a + b * b)}, kMinkowski3);
    }
    case Kind::AntiDeSitter3: {
      const double a = rng.normal() / k;
      const double b = rng.normal() / k;
      const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
      const double t = std::sqrt(1.0 / space.c() + a * a + b * b);
      return AmbientVector({a, b, t * std::cos(angle), t * std::sin(angle)}, kNeutral4);
    }
  }
  throw InvalidInput("unknown model space");
}

AmbientVector sample_tangent(const ModelSpace& space, const AmbientVector& x, Rng& rng) {
  AmbientVector::Storage g(space.signature().dim());
  for (int i = 0; i < g.size(); ++i) g[i] = rng.normal();
  return project_tangent(space, x, AmbientVector(g, space.signature()));
}

AmbientVector sample_unit_tangent(const ModelSpace& space, const AmbientVector& x, Rng& rng) {
  for (;;) {
    const AmbientVector w = sample_tangent(space, x, rng);
    const double q = ambient_dot(w, w);
    if (q > 1e-3) return w / std::sqrt(q);
  }
}

}  // namespace cgm
