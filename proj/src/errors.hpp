#pragma once

#include <stdexcept>
#include <string>

namespace ufc {

// Base class for everything the library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or semantically invalid input data (bad shapes, broken ring
// axioms on load, ring mismatches, unknown section fields, ...).
struct InputError : Error {
    using Error::Error;
};

// A documented precondition of an operation does not hold. Distinct from a
// verification failure: the operation refuses to run, it does not report
// "fail".
struct PreconditionError : Error {
    using Error::Error;
};

// Numerical trouble: singular block on inversion, non-positive matrix fed to
// a positive root, ...
struct NumericError : Error {
    using Error::Error;
};

// A factorization or trivialization produced certificates far above budget.
// Signals invalid input, since the underlying statements guarantee success.
struct DecompositionError : Error {
    using Error::Error;
};

// A solve that is guaranteed consistent for valid input came back with a
// large residual (non-scalar positive block, inconsistent coboundary data).
struct InconsistencyError : Error {
    using Error::Error;
};

} // namespace ufc
