#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative evaluation (series, quadrature, truncated sum) hit its cap
/// without meeting its stopping criterion.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The kernel value at a puncture is +infinity.
class PunctureDivergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bergman
