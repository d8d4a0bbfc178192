#pragma once

#include <stdexcept>
#include <string>

namespace citerank {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed, inconsistent or insufficient input data.
class DataError : public Error {
public:
    using Error::Error;
};

/// Invalid arguments supplied by the caller (bad parameter ranges, unknown ids).
class ArgumentError : public Error {
public:
    using Error::Error;
};

} // namespace citerank
