#pragma once

#include <stdexcept>
#include <string>

namespace cat0 {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input values: empty clouds, parameters out of range, bad files.
class InputError : public Error {
public:
    using Error::Error;
};

// A point, isometry or operation was handed to a space of the wrong kind.
class KindMismatchError : public InputError {
public:
    using InputError::InputError;
};

// Operation not defined for this space/exponent combination.
class UnsupportedError : public InputError {
public:
    using InputError::InputError;
};

}  // namespace cat0
