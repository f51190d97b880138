#pragma once

#include <stdexcept>
#include <string>

namespace tepkit {

// Base of every error raised on purpose by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: non-finite entries, unparsable files, missing fields.
class InputError : public Error {
 public:
  using Error::Error;
};

// Caller contract violation: shape mismatch, unknown identifiers,
// infeasible generator specs.
class UsageError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition does not hold (T not a partial isometry,
// A not T-EP, rank zero where r > 0 is required). Carries the residual of
// the failing check so callers can report how far off the input was.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  explicit DomainError(const std::string& what) : DomainError(what, 0.0) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// The factorization backend reported failure.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, long iterations)
      : Error(what), iterations_(iterations) {}

  // Iterations performed before giving up; -1 when the backend does not
  // report a count.
  long iterations() const noexcept { return iterations_; }

 private:
  long iterations_;
};

}  // namespace tepkit
