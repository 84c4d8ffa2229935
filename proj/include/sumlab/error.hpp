#pragma once

#include <stdexcept>
#include <string>

namespace sumlab {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or non-conforming input (bad spec text, shape mismatch, ...).
struct InvalidInput : Error {
    using Error::Error;
};

/// A desk-scale cap was exceeded (grid product, field size, universe size).
struct ResourceLimit : Error {
    using Error::Error;
};

/// Inversion of zero in a field.
struct DivisionByZero : Error {
    using Error::Error;
};

} // namespace sumlab
