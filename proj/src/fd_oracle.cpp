#include "cgm/fd_oracle.hpp"

#include <Eigen/LU>
#include <cmath>

#include "cgm/errors.hpp"

namespace cgm {

namespace {

Coords shifted(const Coords& u, int i, double t) {
  Coords v = u;
  v[i] += t;
  return v;
}

void require_interior(const MetricField& field, const Coords& u, const FDConfig& cfg) {
  if (u.size() != field.dim) throw InvalidInput(field.name + ": coordinate dimension mismatch");
  if (!field.box.contains(u, 10.0 * cfg.step)) {
    throw DomainError(field.name + ": point too close to the chart boundary");
  }
}

Eigen::MatrixXd checked_inverse(const Eigen::MatrixXd& g) {
  const double det = g.determinant();
  if (!(std::abs(det) > 1e-10)) throw DomainError("singular metric");
  return g.inverse();
}

// Gamma at u without boundary checks; g is the metric at u.
Christoffel christoffel_at(const MetricField& field, const Coords& u, const DiffRule& rule) {
  const int n = field.dim;
  const Eigen::MatrixXd ginv = checked_inverse(field.eval(u));
  std::vector<Eigen::MatrixXd> dg(n);  // dg[l](i,j) = d_l g_ij
  for (int l = 0; l < n; ++l) {
    dg[l] = central_derivative([&](double t) { return field.eval(shifted(u, l, t)); }, rule);
  }
  Christoffel gamma(n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        double s = 0.0;
        for (int l = 0; l < n; ++l) {
          s += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        }
        gamma(k, i, j) = 0.5 * s;
        gamma(k, j, i) = 0.5 * s;
      }
    }
  }
  return gamma;
}

}  // namespace

DiffRule FDConfig::rule() const {
  if (!(step > 0.0 && step < 0.1)) throw InvalidInput("FDConfig: step must lie in (0, 0.1)");
  return {step, richardson};
}

bool Box::contains(const Coords& u, double margin) const {
  if (u.size() != lo.size()) return false;
  for (int i = 0; i < u.size(); ++i) {
    if (!(u[i] > lo[i] + margin && u[i] < hi[i] - margin)) return false;
  }
  return true;
}

Eigen::MatrixXd metric_components(const MetricField& field, const Coords& u,
                                  const FDConfig& cfg) {
  cfg.rule();
  require_interior(field, u, cfg);
  const Eigen::MatrixXd g = field.eval(u);
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-13 * std::max(1.0, g.cwiseAbs().maxCoeff())) {
    throw DomainError(field.name + ": metric is not symmetric");
  }
  if (!(std::abs(g.determinant()) > 1e-10)) throw DomainError(field.name + ": singular metric");
  return g;
}

Christoffel christoffel_fd(const MetricField& field, const Coords& u, const FDConfig& cfg) {
  const DiffRule rule = cfg.rule();
  require_interior(field, u, cfg);
  return christoffel_at(field, u, rule);
}

Riemann riemann_fd(const MetricField& field, const Coords& u, const FDConfig& cfg) {
  const DiffRule rule = cfg.rule();
  require_interior(field, u, cfg);
  const int n = field.dim;
  const Christoffel gamma = christoffel_at(field, u, rule);
  std::vector<Eigen::MatrixXd> dgamma(n);  // dgamma[i] = d_i Gamma
  for (int i = 0; i < n; ++i) {
    dgamma[i] = central_derivative(
        [&](double t) { return Eigen::MatrixXd(christoffel_at(field, shifted(u, i, t), rule).data()); },
        rule);
  }
  auto dG = [&](int i, int l, int j, int k) { return dgamma[i](l, j * n + k); };
  Riemann R(n);
  for (int l = 0; l < n; ++l) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          double s = dG(i, l, j, k) - dG(j, l, i, k);
          for (int m = 0; m < n; ++m) {
            s += gamma(l, i, m) * gamma(m, j, k) - gamma(l, j, m) * gamma(m, i, k);
          }
          R(l, i, j, k) = s;
        }
      }
    }
  }
  return R;
}

double curvature_form(const Riemann& R, const Eigen::MatrixXd& g, const Coords& a,
                      const Coords& b, const Coords& c, const Coords& d) {
  const int n = R.dim();
  Coords rabc = Coords::Zero(n);
  for (int l = 0; l < n; ++l) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) rabc[l] += R(l, i, j, k) * a[i] * b[j] * c[k];
      }
    }
  }
  return d.dot(g * rabc);
}

double sectional_fd(const MetricField& field, const Coords& u, const Coords& v, const Coords& w,
                    const FDConfig& cfg) {
  const Eigen::MatrixXd g = metric_components(field, u, cfg);
  if (v.size() != field.dim || w.size() != field.dim) {
    throw InvalidInput("sectional_fd: plane vectors have the wrong dimension");
  }
  const double area = v.dot(g * v) * w.dot(g * w) - std::pow(v.dot(g * w), 2);
  if (!(std::abs(area) > 1e-8)) throw DomainError("sectional_fd: degenerate plane");
  const Riemann R = riemann_fd(field, u, cfg);
  return curvature_form(R, g, v, w, w, v) / area;
}

Eigen::MatrixXd pullback_fd(const std::function<BundlePoint(const Coords&)>& map,
                            const MetricParams& target, const Coords& u, const DiffRule& rule) {
  const int n = static_cast<int>(u.size());
  std::vector<BundleTangent> lifts;
  lifts.reserve(n);
  for (int i = 0; i < n; ++i) {
    lifts.push_back(connection_split([&](double t) { return map(shifted(u, i, t)); }, rule));
  }
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) g(i, j) = g(j, i) = metric_h(target, lifts[i], lifts[j]);
  }
  return g;
}

BundleTangent differential_fd(const std::function<BundlePoint(const AmbientVector&)>& map,
                              const ModelSpace& source, const AmbientVector& p,
                              const AmbientVector& v, const DiffRule& rule) {
  if (!contains(source, p, 1e-10)) throw InvalidInput("differential_fd: point off the source");
  if (!is_tangent(source, p, v)) throw InvalidInput("differential_fd: vector is not tangent");
  return connection_split([&](double t) { return map(retract(source, p + t * v)); }, rule);
}

Eigen::MatrixXd pullback_fd(const std::function<BundlePoint(const AmbientVector&)>& map,
                            const ModelSpace& source, const AmbientVector& p,
                            const std::vector<AmbientVector>& vectors,
                            const MetricParams& target, const DiffRule& rule) {
  const int n = static_cast<int>(vectors.size());
  std::vector<BundleTangent> images;
  images.reserve(n);
  for (const AmbientVector& v : vectors) images.push_back(differential_fd(map, source, p, v, rule));
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) g(i, j) = g(j, i) = metric_h(target, images[i], images[j]);
  }
  return g;
}

}  // namespace cgm
