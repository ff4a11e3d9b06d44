// Error types shared by all gasfilt modules.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gasfilt {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A point lies outside a model's (T, v) rectangle, or a geometric
// precondition (grid sizes, source placement) is violated.
struct DomainError : Error {
    using Error::Error;
};

// Invalid constructor parameter (n <= 0, non-positive scale, ...).
struct ParamError : Error {
    using Error::Error;
};

// Evaluation requested on a singular set where the quantity diverges.
struct SingularError : Error {
    using Error::Error;
};

struct NoRootError : Error {
    using Error::Error;
};

struct ConvergenceError : Error {
    ConvergenceError(const std::string& what, std::vector<double> history = {})
        : Error(what), residual_history(std::move(history)) {}
    std::vector<double> residual_history;
};

struct SupercriticalError : Error {
    using Error::Error;
};

struct QuadratureError : Error {
    using Error::Error;
};

struct BranchAmbiguityError : Error {
    using Error::Error;
};

struct SingularPointError : Error {
    using Error::Error;
};

struct ExtrapolationError : Error {
    using Error::Error;
};

} // namespace gasfilt
