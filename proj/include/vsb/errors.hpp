#pragma once

#include <stdexcept>
#include <string>

namespace vsb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadRationalError : Error {
    using Error::Error;
};

struct MixedParityError : Error {
    using Error::Error;
};

struct SpaceMismatchError : Error {
    using Error::Error;
};

struct WindowExceededError : Error {
    using Error::Error;
};

struct ClosureNotStabilizedError : Error {
    using Error::Error;
};

struct PrerequisiteFailedError : Error {
    using Error::Error;
};

// Raised when a construction that promises a law-abiding result detects a
// violated law; `axiom` carries the report label of the failed identity.
struct AxiomViolationError : Error {
    AxiomViolationError(std::string axiom_label, const std::string& msg)
        : Error(axiom_label + ": " + msg), axiom(std::move(axiom_label)) {}
    std::string axiom;
};

struct InvariantViolationError : Error {
    InvariantViolationError(std::string name, const std::string& msg)
        : Error(name + ": " + msg), invariant(std::move(name)) {}
    std::string invariant;
};

} // namespace vsb
