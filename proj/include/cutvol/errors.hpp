#pragma once

#include <stdexcept>
#include <string>

namespace cutvol {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Hyperplane parallel to or containing the R^n factor (|alpha| = 0).
struct DegenerateHyperplane : Error {
    using Error::Error;
};

// Hyperplane outside the domain where the exact cut polynomial is valid.
struct OutsideLacuna : Error {
    using Error::Error;
};

// Adaptive refinement exhausted its budget before reaching the error target.
struct QuadratureFailure : Error {
    using Error::Error;
};

// Closed-form cap polynomial requested in an even dimension.
struct EvenDimension : Error {
    using Error::Error;
};

// Cutting hyperplane does not meet the body.
struct NoIntersection : Error {
    using Error::Error;
};

// Least-squares design matrix has rank below the coefficient count.
struct RankDeficient : Error {
    using Error::Error;
};

} // namespace cutvol
