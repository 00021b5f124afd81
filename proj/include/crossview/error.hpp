#pragma once

#include <stdexcept>
#include <string>

namespace crossview {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid argument or violated call contract (bad parameter range,
// unnormalized embeddings, degenerate batch, ...).
struct ValueError : Error {
    using Error::Error;
};

// Image/heatmap geometry does not match what the operation requires
// (wrong view kind, non-square satellite, shape mismatch).
struct GeometryError : Error {
    using Error::Error;
};

// Bad run configuration (unknown key, missing key, inconsistent specs).
struct ConfigError : Error {
    using Error::Error;
};

// File-format parse failure; message carries path and line number.
struct ParseError : Error {
    using Error::Error;
};

// Filesystem / PNG / checkpoint I/O failure.
struct IoError : Error {
    using Error::Error;
};

// Non-finite values encountered where finite math is required.
struct NumericError : Error {
    using Error::Error;
};

}  // namespace crossview
