#pragma once

#include <stdexcept>
#include <string>

namespace greenbox {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input or violated precondition.
struct InvalidInput : Error {
    using Error::Error;
};

// Request exceeds a supported size bound.
struct BoundExceeded : Error {
    using Error::Error;
};

// An internal consistency check failed during a computation.
struct VerificationFailure : Error {
    using Error::Error;
};

}  // namespace greenbox
