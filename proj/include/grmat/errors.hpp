#pragma once

#include <stdexcept>
#include <string>

namespace grmat {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ill-formed group spec string or unusable command input.
struct SpecError : Error {
  using Error::Error;
};

/// Input data fails a structural requirement: a table that is not a group,
/// a matrix that does not carry the group's pattern, ragged blocks.
struct StructureError : Error {
  using Error::Error;
};

/// A toleranced verification failed; carries the worst residual observed.
struct VerificationError : Error {
  double residual;
  VerificationError(const std::string& what, double r) : Error(what), residual(r) {}
};

/// Numeric quality failure: a quantity that must be near-integral or
/// well-separated is not.
struct NumericError : Error {
  using Error::Error;
};

/// Request to invert an element of the center that annihilates an idempotent.
struct ZeroDivisorError : Error {
  using Error::Error;
};

}  // namespace grmat
