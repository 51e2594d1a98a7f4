#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qmin {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PresentationMismatch : Error {
    using Error::Error;
};

struct NotDivisible : Error {
    using Error::Error;
};

struct OutOfBounds : Error {
    using Error::Error;
};

struct NotDoubleInterval : Error {
    using Error::Error;
};

/// Parse error; `pos` is a 0-based offset into the input text.
struct SyntaxError : Error {
    std::size_t pos;
    SyntaxError(const std::string& msg, std::size_t at)
        : Error(msg + " (at offset " + std::to_string(at) + ")"), pos(at) {}
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

/// Names the violated clause in what().
struct PreconditionViolated : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotInvertible : Error {
    using Error::Error;
};

struct WcastViolation : Error {
    using Error::Error;
};

struct NotPressed : Error {
    using Error::Error;
};

struct DivisionFailure : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    using Error::Error;
};

}  // namespace qmin
