#pragma once

#include <stdexcept>

namespace isoperim {

// Domain-specific failures. Each carries a human-readable message naming the
// offending input; callers that need to distinguish catch by type.

struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Quadrature hit the node cap with the successive-refinement difference still
// above tolerance (rough or non-periodic integrand).
struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integrand returned NaN or infinity at an evaluation node.
struct NonFinite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cumulative integrand not strictly positive (non-regular curve).
struct NonMonotone : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroMeanViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotClosed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotUnitSpeed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TooFewPoints : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct HarmonicsExceedNyquist : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Arc-length inversion failed to reach the target residual even after the
// bisection fallback.
struct NewtonStall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace isoperim
