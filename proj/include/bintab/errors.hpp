#pragma once

#include <stdexcept>
#include <string>

namespace bintab {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (axis out of
/// range, nonpositive odds ratio, zero cell in a logarithm, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Correlation requested for a coordinate whose margin is 0 or 1.
class DegenerateMarginError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed textual input. `cell` is the offending cell index when known.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, long cell = -1)
        : Error(cell >= 0 ? what + " (cell " + std::to_string(cell) + ")" : what), cell_(cell) {}
    long cell() const noexcept { return cell_; }

private:
    long cell_;
};

/// Targets that no nonnegative table can meet, or a polytope that turned out
/// to be empty.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// A pmf that is not a convex combination of the given vertices.
class NotInPolytopeError : public Error {
public:
    NotInPolytopeError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    /// Smallest max-norm residual reached by nonnegative weights.
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

}  // namespace bintab
