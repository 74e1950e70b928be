#include "cgm/ambient.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "cgm/errors.hpp"

namespace cgm {

namespace {

void require_same(const AmbientVector& u, const AmbientVector& v) {
  if (!(u.signature() == v.signature())) {
    throw InvalidInput("ambient vectors have different signatures");
  }
}

}  // namespace

Signature::Signature(int plus, int minus) : plus_count(plus), minus_count(minus) {
  if (plus < 0 || minus < 0 || (plus + minus != 3 && plus + minus != 4)) {
    throw InvalidInput("signature must have 3 or 4 slots, got (" + std::to_string(plus) + "," +
                       std::to_string(minus) + ")");
  }
}

AmbientVector::AmbientVector(const Storage& components, Signature signature)
    : components_(components), signature_(signature) {
  if (components_.size() != signature_.dim()) {
    throw InvalidInput("component count does not match signature");
  }
}

AmbientVector::AmbientVector(std::initializer_list<double> components, Signature signature)
    : signature_(signature) {
  if (static_cast<int>(components.size()) != signature_.dim()) {
    throw InvalidInput("component count does not match signature");
  }
  components_.resize(signature_.dim());
  int i = 0;
  for (double c : components) components_[i++] = c;
}

AmbientVector AmbientVector::zero(Signature signature) {
  return AmbientVector(Storage::Zero(signature.dim()), signature);
}

double AmbientVector::max_abs() const {
  return components_.size() == 0 ? 0.0 : components_.cwiseAbs().maxCoeff();
}

AmbientVector& AmbientVector::operator+=(const AmbientVector& other) {
  require_same(*this, other);
  components_ += other.components_;
  return *this;
}

AmbientVector& AmbientVector::operator-=(const AmbientVector& other) {
  require_same(*this, other);
  components_ -= other.components_;
  return *this;
}

AmbientVector& AmbientVector::operator*=(double s) {
  components_ *= s;
  return *this;
}

AmbientVector& AmbientVector::operator/=(double s) {
  components_ /= s;
  return *this;
}

AmbientVector operator+(AmbientVector a, const AmbientVector& b) { return a += b; }
AmbientVector operator-(AmbientVector a, const AmbientVector& b) { return a -= b; }
AmbientVector operator-(AmbientVector a) { return a *= -1.0; }
AmbientVector operator*(AmbientVector a, double s) { return a *= s; }
AmbientVector operator*(double s, AmbientVector a) { return a *= s; }
AmbientVector operator/(AmbientVector a, double s) { return a /= s; }

double ambient_dot(const AmbientVector& u, const AmbientVector& v) {
  require_same(u, v);
  const auto& a = u.components();
  const auto& b = v.components();
  const int plus = u.signature().plus_count;
  double s = 0.0;
  for (int i = 0; i < plus; ++i) s += a[i] * b[i];
  for (int i = plus; i < u.size(); ++i) s -= a[i] * b[i];
  return s;
}

double max_abs_diff(const AmbientVector& u, const AmbientVector& v) {
  require_same(u, v);
  return (u.components() - v.components()).cwiseAbs().maxCoeff();
}

std::ostream& operator<<(std::ostream& os, const AmbientVector& v) {
  os << "(";
  for (int i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os << ")_[" << v.signature().plus_count << "," << v.signature().minus_count << "]";
}

}  // namespace cgm
