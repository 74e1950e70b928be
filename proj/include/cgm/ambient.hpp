#pragma once

#include <Eigen/Core>
#include <initializer_list>
#include <iosfwd>

namespace cgm {

// Index of a pseudo-Euclidean space R^n_nu: plus_count positive slots
// followed by minus_count negative slots.
struct Signature {
  int plus_count = 0;
  int minus_count = 0;

  Signature() = default;
  Signature(int plus, int minus);

  int dim() const { return plus_count + minus_count; }
  bool operator==(const Signature&) const = default;
};

inline const Signature kEuclidean3{3, 0};
inline const Signature kEuclidean4{4, 0};
inline const Signature kMinkowski3{2, 1};
inline const Signature kNeutral4{2, 2};

// A point or tangent vector of an embedded model space, carrying the
// signature of the ambient scalar product it lives in.
class AmbientVector {
 public:
  using Storage = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 4, 1>;

  AmbientVector() = default;
  AmbientVector(const Storage& components, Signature signature);
  AmbientVector(std::initializer_list<double> components, Signature signature);

  static AmbientVector zero(Signature signature);

  const Storage& components() const { return components_; }
  Signature signature() const { return signature_; }
  int size() const { return static_cast<int>(components_.size()); }
  double operator[](int i) const { return components_[i]; }

  // Largest absolute component.
  double max_abs() const;

  AmbientVector& operator+=(const AmbientVector& other);
  AmbientVector& operator-=(const AmbientVector& other);
  AmbientVector& operator*=(double s);
  AmbientVector& operator/=(double s);

 private:
  Storage components_;
  Signature signature_;
};

AmbientVector operator+(AmbientVector a, const AmbientVector& b);
AmbientVector operator-(AmbientVector a, const AmbientVector& b);
AmbientVector operator-(AmbientVector a);
AmbientVector operator*(AmbientVector a, double s);
AmbientVector operator*(double s, AmbientVector a);
AmbientVector operator/(AmbientVector a, double s);

// Signed scalar product: plus slots minus minus slots.
double ambient_dot(const AmbientVector& u, const AmbientVector& v);

// Largest componentwise difference; signatures must agree.
double max_abs_diff(const AmbientVector& u, const AmbientVector& v);

std::ostream& operator<<(std::ostream& os, const AmbientVector& v);

}  // namespace cgm
