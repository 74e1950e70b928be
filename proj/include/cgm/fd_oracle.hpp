#pragma once

#include <Eigen/Core>
#include <functional>
#include <string>
#include <vector>

#include "cgm/bundle.hpp"
#include "cgm/model_spaces.hpp"
#include "cgm/numdiff.hpp"

namespace cgm {

using Coords = Eigen::VectorXd;

struct FDConfig {
  double step = 1e-3;
  bool richardson = true;

  DiffRule rule() const;  // validates 0 < step < 0.1
};

// Open coordinate box.
struct Box {
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;

  int dim() const { return static_cast<int>(lo.size()); }
  bool contains(const Coords& u, double margin = 0.0) const;
};

struct MetricField {
  std::string name;
  int dim = 0;
  Box box;
  std::function<Eigen::MatrixXd(const Coords&)> eval;
};

// Gamma^k_ij stored as k -> (i, j).
class Christoffel {
 public:
  explicit Christoffel(int n) : n_(n), data_(Eigen::MatrixXd::Zero(n, n * n)) {}
  int dim() const { return n_; }
  double operator()(int k, int i, int j) const { return data_(k, i * n_ + j); }
  double& operator()(int k, int i, int j) { return data_(k, i * n_ + j); }
  const Eigen::MatrixXd& data() const { return data_; }
  Eigen::MatrixXd& data() { return data_; }

 private:
  int n_;
  Eigen::MatrixXd data_;
};

// R^l_ijk = R(d_i, d_j) d_k in the l-th coordinate.
class Riemann {
 public:
  explicit Riemann(int n) : n_(n), data_(n * n * n * n, 0.0) {}
  int dim() const { return n_; }
  double operator()(int l, int i, int j, int k) const { return data_[index(l, i, j, k)]; }
  double& operator()(int l, int i, int j, int k) { return data_[index(l, i, j, k)]; }

 private:
  int index(int l, int i, int j, int k) const { return ((l * n_ + i) * n_ + j) * n_ + k; }
  int n_;
  std::vector<double> data_;
};

// g_ij(u); throws DomainError within 10 steps of the box boundary or when
// the matrix is singular.
Eigen::MatrixXd metric_components(const MetricField& field, const Coords& u,
                                  const FDConfig& cfg = {});

Christoffel christoffel_fd(const MetricField& field, const Coords& u, const FDConfig& cfg = {});

Riemann riemann_fd(const MetricField& field, const Coords& u, const FDConfig& cfg = {});

// g(R(a, b) c, d).
double curvature_form(const Riemann& R, const Eigen::MatrixXd& g, const Coords& a,
                      const Coords& b, const Coords& c, const Coords& d);

// Sectional curvature of span{v, w}; DomainError on a degenerate plane.
double sectional_fd(const MetricField& field, const Coords& u, const Coords& v, const Coords& w,
                    const FDConfig& cfg = {});

// Pullback of h_{m,r} under a coordinate map into TM. Coordinate vectors are
// split by the numerical connection map.
Eigen::MatrixXd pullback_fd(const std::function<BundlePoint(const Coords&)>& map,
                            const MetricParams& target, const Coords& u,
                            const DiffRule& rule = {});

// dF(v) for a map defined on a quadric, differentiating along the retracted
// line p + t v.
BundleTangent differential_fd(const std::function<BundlePoint(const AmbientVector&)>& map,
                              const ModelSpace& source, const AmbientVector& p,
                              const AmbientVector& v, const DiffRule& rule = {});

// Gram matrix h(dF v_i, dF v_j) with dF from differential_fd.
Eigen::MatrixXd pullback_fd(const std::function<BundlePoint(const AmbientVector&)>& map,
                            const ModelSpace& source, const AmbientVector& p,
                            const std::vector<AmbientVector>& vectors,
                            const MetricParams& target, const DiffRule& rule = {});

}  // namespace cgm
