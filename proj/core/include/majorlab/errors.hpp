#pragma once

#include <stdexcept>
#include <string>

namespace majorlab {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A probability entry was negative.
struct NegativeEntry : Error {
  using Error::Error;
};

/// Entries of a distribution (or a channel row) do not sum to one exactly.
struct NotNormalised : Error {
  using Error::Error;
};

/// Vector/matrix shapes are incompatible for the requested operation.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// An index was outside the alphabet.
struct IndexOutOfRange : Error {
  using Error::Error;
};

/// A witness was requested for a pair that is not ordered.
struct NotMajorised : Error {
  using Error::Error;
};

/// A square channel was expected to preserve the uniform distribution but does not.
struct NotBistochastic : Error {
  using Error::Error;
};

/// An operation required a strictly positive distribution.
struct NotFullSupport : Error {
  using Error::Error;
};

/// The construction's ordering preconditions cannot be met (e.g. p = q where a
/// genuine perturbation direction is required).
struct DegenerateInput : Error {
  using Error::Error;
};

/// A stated theorem hypothesis does not hold for the given inputs.
struct PreconditionViolated : Error {
  using Error::Error;
};

/// A candidate certificate failed its exact feasibility check.
struct WitnessInfeasible : Error {
  using Error::Error;
};

/// A perturbation left the domain (e.g. u + eps*v outside the simplex).
struct DomainViolation : Error {
  using Error::Error;
};

/// An extended-real value would be negative or NaN.
struct InvalidValue : Error {
  using Error::Error;
};

/// Text could not be parsed as a rational / distribution / channel.
struct ParseError : Error {
  using Error::Error;
};

/// Two-sided approximants failed to settle; carries the last certified bracket.
/// `upper` may be +infinity when the upper program is infeasible.
struct ExtensionDiverged : Error {
  ExtensionDiverged(const std::string& what, double lower_bound, double upper_bound)
      : Error(what), lower(lower_bound), upper(upper_bound) {}
  double lower;
  double upper;
};

}  // namespace majorlab
