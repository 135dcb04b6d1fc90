#pragma once

#include <stdexcept>
#include <string>

namespace nlkg {

// Base for every failure raised by the library. The CLI maps the subclasses
// onto exit codes (constraint -> 2, numerical -> 3).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Evaluation hit a pole of a power or a division by a vanishing parameter.
class PoleError : public Error {
public:
    using Error::Error;
};

// Argument outside the region where a closed form is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

// The field or one of its derivatives is singular at the requested point.
class SingularityError : public Error {
public:
    using Error::Error;
};

// Parameter set violates one of the model's algebraic relations.
class ConstraintError : public Error {
public:
    using Error::Error;
};

// Numerical procedure failed (non-convergence, NaN, positivity floor).
class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace nlkg
