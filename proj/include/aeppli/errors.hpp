// Error taxonomy shared by the whole library.
//
// DomainError covers violated preconditions and unusable inputs (CLI exit 2),
// InternalCheckError covers failed self-checks (CLI exit 3).  Legal negative
// outcomes (an infeasible tower, an infeasible cone, a missing d-closed
// representative) are ordinary return values, never exceptions.

#pragma once

#include <stdexcept>
#include <string>

namespace aeppli {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};

struct ParseError : DomainError {
    using DomainError::DomainError;
};

struct NonIntegrableError : DomainError {
    using DomainError::DomainError;
};

struct JacobiViolationError : DomainError {
    using DomainError::DomainError;
};

struct FormNotInKernelError : DomainError {
    using DomainError::DomainError;
};

struct FrameSingularError : DomainError {
    using DomainError::DomainError;
};

struct NonRealFormError : DomainError {
    using DomainError::DomainError;
};

struct WrongDimensionError : DomainError {
    using DomainError::DomainError;
};

struct IllConditionedError : DomainError {
    using DomainError::DomainError;
};

struct LpNumericalError : DomainError {
    using DomainError::DomainError;
};

// A failed internal invariant: the computation itself is wrong, not the input.
struct InternalCheckError : Error {
    using Error::Error;
};

inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw InternalCheckError("internal check failed: " + what);
}

}  // namespace aeppli
