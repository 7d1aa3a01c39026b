#pragma once

#include <stdexcept>
#include <string>

namespace cgaskey {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter set violates a validity condition (maps to CLI exit code 2).
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// A denominator vanished while evaluating a formula at concrete parameters.
class SingularParameter : public InvalidParameter {
public:
    using InvalidParameter::InvalidParameter;
};

/// The dF kernel on a block did not have dimension one.
class KernelDimensionError : public Error {
public:
    using Error::Error;
};

/// A homogeneous system expected to have a one-dimensional solution space did not.
class SolutionSpaceError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (scalars, documents, config files).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace cgaskey
