#pragma once

#include <stdexcept>
#include <string>

namespace ctsurf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bad numeric input (non-finite, outside the supported length range, ...)
struct ValidationError : Error {
    using Error::Error;
};

// evaluation requested outside an operation's domain
struct DomainError : Error {
    using Error::Error;
};

// redundant identities disagree beyond tolerance; numeric breakdown
struct ConsistencyError : Error {
    using Error::Error;
};

// precondition of a lemma-style check not met by the arguments
struct PreconditionError : Error {
    using Error::Error;
};

struct QuadratureFailure : Error {
    using Error::Error;
};

// no cuff assignment can satisfy the requested profile
struct InfeasibleProfile : Error {
    using Error::Error;
};

// explicit length table increases along an end
struct NonMonotone : Error {
    using Error::Error;
};

struct DepthTooLarge : Error {
    using Error::Error;
};

struct StepTooLarge : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace ctsurf
