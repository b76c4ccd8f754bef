#pragma once

#include <stdexcept>
#include <string>

namespace periodgeom {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed textual input (rational strings, JSON fields, CLI values).
class FormatError : public Error {
public:
  using Error::Error;
};

/// Shape or dimension mismatch between operands.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// Operation invoked on the wrong numeric backend (exact vs floating).
class BackendError : public Error {
public:
  using Error::Error;
};

/// Matrix expected to be invertible is singular.
class SingularError : public Error {
public:
  using Error::Error;
};

/// Matrix expected to be nilpotent is not.
class NotNilpotentError : public Error {
public:
  using Error::Error;
};

/// Gram-Schmidt hit a zero form-norm; `index` is the first failing vector.
class DegenerateFlagError : public Error {
public:
  DegenerateFlagError(std::size_t index, const std::string& msg)
      : Error(msg), index(index) {}
  std::size_t index;
};

/// Filtration pair fails the splitting axioms.
class NotMixedHodgeError : public Error {
public:
  using Error::Error;
};

/// A family of filtrations admits no common compatible splitting.
class IncompatibleFiltrationsError : public Error {
public:
  using Error::Error;
};

/// Cone generators fail a cone-level consistency check.
class ConeError : public Error {
public:
  using Error::Error;
};

/// Input data failed structural validation; see the attached report text.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Evaluation requested at a point whose Hodge form is not positive.
class UnpolarizedError : public Error {
public:
  using Error::Error;
};

/// Least-squares system too ill-conditioned to trust.
class IllConditionedError : public Error {
public:
  using Error::Error;
};

/// Result cannot be certified either way (boundary cases, budget exhausted).
class IndeterminateError : public Error {
public:
  using Error::Error;
};

/// Requested combination is outside the supported scope.
class UnsupportedError : public Error {
public:
  using Error::Error;
};

}  // namespace periodgeom
