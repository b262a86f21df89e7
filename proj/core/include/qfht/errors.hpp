#pragma once

#include <stdexcept>
#include <string>

namespace qfht {

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A series or iteration failed to reach its tolerance within the cap.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An eigen-solve or other numerical kernel failed.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two signals (or a signal and an operator) are tied to different rules.
struct RuleMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operators combined with incompatible alpha or rule.
struct ConfigMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A coefficient count exceeds the exactness bound of a quadrature rule.
struct ExactnessError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace qfht
