#pragma once

#include <type_traits>
#include <utility>

namespace cgm {

// Central-difference rule; with richardson the h and h/2 estimates are
// combined into a fourth-order stencil.
struct DiffRule {
  double step = 1e-5;
  bool richardson = false;
};

// Derivative at 0 of a curve t -> f(t) whose values support +, - and
// scalar multiplication.
template <typename F>
auto central_derivative(F&& f, const DiffRule& rule) {
  using Value = std::decay_t<decltype(f(0.0))>;
  const double h = rule.step;
  Value d_h = (f(h) - f(-h)) * (1.0 / (2.0 * h));
  if (!rule.richardson) return d_h;
  Value d_half = (f(0.5 * h) - f(-0.5 * h)) * (1.0 / h);
  return Value((d_half * 4.0 - d_h) * (1.0 / 3.0));
}

}  // namespace cgm
