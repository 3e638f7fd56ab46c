#pragma once

#include <stdexcept>
#include <string>

namespace cotanhom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix or graded-map dimensions do not line up.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A structure violates an algebraic constraint (d^2 != 0, relation fails, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Malformed input data: bad cell ids, unknown builtins, unparsable files.
class InputError : public Error {
public:
    using Error::Error;
};

/// A cell complex refers to a cell id that was never declared.
class ReferenceError : public InputError {
public:
    using InputError::InputError;
};

/// Homology does not describe a closed connected orientable surface.
class ClassificationError : public Error {
public:
    using Error::Error;
};

/// The hom-complex differential is only known when every generator is closed.
class UnsupportedDifferentialError : public Error {
public:
    using Error::Error;
};

}  // namespace cotanhom
