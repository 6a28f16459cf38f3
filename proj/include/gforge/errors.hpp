#pragma once

#include <stdexcept>
#include <string>

namespace gforge {

/// Base class of every engine error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that cannot describe a finite-dimensional bound quiver algebra or a
/// module over one.
class InputError : public Error {
 public:
  using Error::Error;
};

class MalformedRelation : public InputError {
 public:
  using InputError::InputError;
};

/// The path basis is still nonzero at the configured maximal path length.
class NonAdmissible : public InputError {
 public:
  NonAdmissible(int degree, const std::string& what)
      : InputError(what), degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

/// Errors caused by a resource or certification bound rather than bad input.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A summand could be neither split further nor certified indecomposable
/// (its endomorphism ring modulo radical has dimension > 1).
class NonSplitIndecomposable : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

class BoundExceeded : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

class TooManySimples : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

/// Occurrences of a summand in the layer chain are not contiguous. This can
/// only be an engine bug.
class IntervalViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace gforge
