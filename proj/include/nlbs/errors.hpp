#pragma once

#include <stdexcept>
#include <string>

namespace nlbs {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Evaluation point lies outside the domain of a closed form
/// (log of a nonpositive value, sqrt of a negative value, x <= 0, ...).
struct DomainError : Error {
  using Error::Error;
};

/// A volatility-model denominator is below the pole guard threshold.
struct DenominatorVanishes : DomainError {
  using DomainError::DomainError;
};

/// A catalog validity predicate or a constant constraint failed.
struct DomainViolation : Error {
  using Error::Error;
};

/// Every node of a scan grid was excluded by the validity predicate.
struct EmptyDomain : Error {
  using Error::Error;
};

/// A sampled Lie bracket does not lie in the span of the basis fields.
struct NotInSpan : Error {
  using Error::Error;
};

/// The square-root argument of a reduced equation went negative.
struct NegativeRadicand : Error {
  NegativeRadicand(const std::string& what, double value)
      : Error(what), value(value) {}
  double value;
};

/// The adaptive integrator could not keep the local error within
/// tolerance at any representable step size.
struct StepSizeUnderflow : Error {
  using Error::Error;
};

/// A grid maps outside the span of an integrated trajectory.
struct RangeExceeded : Error {
  using Error::Error;
};

/// A parametric tau-range touches a singular parameter value.
struct SingularTau : Error {
  using Error::Error;
};

/// A Remark-style substitution's sign condition failed along a trajectory.
struct SubstitutionDomain : Error {
  using Error::Error;
};

/// The finite-difference solution exceeded the blowup threshold.
struct Blowup : Error {
  using Error::Error;
};

/// Initial and boundary data disagree at a grid corner.
struct CornerMismatch : Error {
  using Error::Error;
};

}  // namespace nlbs
