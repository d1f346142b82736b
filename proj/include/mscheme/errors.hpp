#pragma once

#include <stdexcept>
#include <string>

namespace mscheme {

/// Base class for all library errors. The CLI maps each concrete type to a
/// distinct exit code (see tools/ and README).
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Coupling map violates a structural invariant (edge count, ground/excited
/// classification, duplicate edge).
class InvalidTopology : public Error {
  public:
    using Error::Error;
};

/// Coupling graph contains a cycle; no consistent rotating frame exists.
class CyclicTopology : public InvalidTopology {
  public:
    using InvalidTopology::InvalidTopology;
};

/// A physical parameter is out of range; the message names the field.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// The Liouvillian nullspace is not one-dimensional.
class DegenerateSteadyState : public Error {
  public:
    using Error::Error;
};

/// The replaced-row linear system is numerically singular.
class SingularSolve : public Error {
  public:
    using Error::Error;
};

/// Time integration cannot satisfy its accuracy contract above the step floor.
class StepFailure : public Error {
  public:
    using Error::Error;
};

/// Branch tracking found an overlap below 1/sqrt(2); the sweep is too coarse.
class AmbiguousTracking : public Error {
  public:
    using Error::Error;
};

/// Configuration document is not well-formed.
class ParseError : public Error {
  public:
    using Error::Error;
};

/// Configuration document contains a key outside the schema.
class UnknownKey : public Error {
  public:
    using Error::Error;
};

/// File could not be read or written; the message names the path.
class IoError : public Error {
  public:
    using Error::Error;
};

}  // namespace mscheme
