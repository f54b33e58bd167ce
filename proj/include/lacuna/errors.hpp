#pragma once

#include <stdexcept>
#include <string>

namespace lacuna {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (rationals, config files, reports).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// A documented precondition does not hold for the given arguments.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Result would exceed a configured size cap (degree cap, row cap).
struct CapacityError : Error {
    explicit CapacityError(const std::string& what) : Error(what) {}
};

// A denominator vanishes where an inverse is required.
struct SingularDenominatorError : Error {
    explicit SingularDenominatorError(const std::string& what) : Error(what) {}
};

// An iterative numeric routine did not reach the requested precision.
struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& what) : Error(what) {}
};

// The matrix under inspection does not have the structure the caller
// relies on (wrong kernel dimension, zero matrix, shape mismatch).
struct StructureError : Error {
    explicit StructureError(const std::string& what) : Error(what) {}
};

// A sparsity condition was requested for the wrong multiplicity case.
struct CaseError : Error {
    explicit CaseError(const std::string& what) : Error(what) {}
};

// The requested sparsity condition fails; carries the first violating
// pair of block indices.
struct ConditionViolation : Error {
    std::size_t ell;
    std::size_t ell_prime;
    ConditionViolation(const std::string& what, std::size_t l, std::size_t lp)
        : Error(what), ell(l), ell_prime(lp) {}
};

}  // namespace lacuna
