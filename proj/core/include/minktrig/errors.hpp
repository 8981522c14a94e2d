#pragma once

#include <stdexcept>
#include <string>

namespace minktrig {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (zero vector, interior point, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Invalid NormSpec or context parameters.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A numerical procedure failed to converge or produced non-finite values.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Operation only defined for a class of planes the context does not belong to.
class UnsupportedOperation : public Error {
public:
    using Error::Error;
};

}  // namespace minktrig
