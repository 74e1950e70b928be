#pragma once

#include <gtest/gtest.h>

#include <initializer_list>

#include "cgm/ambient.hpp"
#include "cgm/bundle.hpp"

namespace cgm::testing {

inline ::testing::AssertionResult near(const AmbientVector& a, const AmbientVector& b,
                                       double tol) {
  if (!(a.signature() == b.signature())) return ::testing::AssertionFailure() << "signatures differ";
  const double d = max_abs_diff(a, b);
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << a << " vs " << b << " differ by " << d;
}

inline ::testing::AssertionResult near(const BundleTangent& a, const BundleTangent& b, double tol) {
  const double d = max_abs_diff(a, b);
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "(" << a.X << ", " << a.Y << ") vs (" << b.X << ", "
                                       << b.Y << ") differ by " << d;
}

inline AmbientVector e3v(std::initializer_list<double> v) { return AmbientVector(v, kEuclidean3); }
inline AmbientVector e4v(std::initializer_list<double> v) { return AmbientVector(v, kEuclidean4); }
inline AmbientVector m3v(std::initializer_list<double> v) { return AmbientVector(v, kMinkowski3); }
inline AmbientVector n4v(std::initializer_list<double> v) { return AmbientVector(v, kNeutral4); }

}  // namespace cgm::testing
