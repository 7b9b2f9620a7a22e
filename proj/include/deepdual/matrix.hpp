#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace deepdual {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Thrown when an argument violates an operation's preconditions
/// (non-finite entries, non-PSD input where PSD is required, ...).
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a requested problem shape is inconsistent
/// (layer width below rank, missing branches, ...).
struct InvalidSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when the labels are not interpolable, i.e. Y != X X^+ Y.
struct InfeasibleData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown for problem classes the library deliberately does not solve.
struct UnsupportedProblem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an internal numerical check fails.
struct NumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool all_finite(const Matrix& a) { return a.allFinite(); }

inline void require_finite(const Matrix& a, const std::string& what) {
    if (!a.allFinite())
        throw InvalidInput(what + ": non-finite entries");
}

} // namespace deepdual
