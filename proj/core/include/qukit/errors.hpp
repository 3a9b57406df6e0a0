#pragma once

#include <stdexcept>
#include <string>

namespace qukit {

/// Base class for all qukit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A basis label, site index, or occupation slot is out of range.
struct IndexError : Error {
    using Error::Error;
};

/// Two objects that must share (n_sites, local_dim) do not.
struct ShapeError : Error {
    using Error::Error;
};

/// A requested full-space or dense object exceeds its size guard.
struct SizeError : Error {
    using Error::Error;
};

/// A zero vector, zero factor, or otherwise unusable input.
struct DegenerateInput : Error {
    using Error::Error;
};

/// The tau parametrization is anchored on a basis amplitude that vanishes.
struct ChartSingularity : Error {
    using Error::Error;
};

/// No symmetric basis state with overlap above the witness tolerance was found.
struct WitnessFailure : Error {
    using Error::Error;
};

/// A state or parameter file does not match its schema.
struct FileFormatError : Error {
    using Error::Error;
};

} // namespace qukit
