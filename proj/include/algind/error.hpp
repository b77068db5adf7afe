#pragma once

#include <stdexcept>
#include <string>

namespace algind {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Syntax error with a 1-based source position.
struct ParseError : Error {
    int line;
    int column;
    ParseError(int l, int c, const std::string& msg)
        : Error("parse error at " + std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
          line(l),
          column(c) {}
};

// A document or job violates a schema or mode invariant.
struct ValidationError : Error {
    using Error::Error;
};

// A numeric argument is outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Division by zero and friends.
struct ArithmeticError : Error {
    using Error::Error;
};

// Mismatched variable lists or other structural misuse of the API.
struct StructuralError : Error {
    using Error::Error;
};

// A certified computation hit its precision ceiling.
struct PrecisionError : Error {
    using Error::Error;
};

// A randomized procedure ran out of budget with no definitive answer.
struct BudgetError : Error {
    using Error::Error;
};

struct InternalError : Error {
    using Error::Error;
};

} // namespace algind
