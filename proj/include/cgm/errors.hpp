#pragma once

#include <stdexcept>
#include <string>

namespace cgm {

// Bad arguments: signature mismatch, off-manifold points, non-tangent vectors.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Arguments outside the region where a formula is defined.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Well-formed request the library deliberately does not cover.
class Unsupported : public std::logic_error {
 public:
  explicit Unsupported(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cgm
