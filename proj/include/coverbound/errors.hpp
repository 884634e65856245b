#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace coverbound {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid input data (graph files, tables, parameters).
class InputError : public Error {
public:
    explicit InputError(const std::string& what, std::optional<std::size_t> line = std::nullopt)
        : Error(line ? "line " + std::to_string(*line) + ": " + what : what), line_(line) {}

    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    std::optional<std::size_t> line_;
};

/// An operation was called on an input that violates its documented precondition
/// (non-regular graph, degree-1 vertex, disconnected graph, out-of-range vertex).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An unraveled ball or walk enumeration would exceed the node budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::size_t level, std::size_t projected, std::size_t budget)
        : Error("node budget " + std::to_string(budget) + " exceeded at level " +
                std::to_string(level) + " (projected size " + std::to_string(projected) + ")"),
          level_(level), projected_(projected) {}

    std::size_t level() const noexcept { return level_; }
    std::size_t projected() const noexcept { return projected_; }

private:
    std::size_t level_;
    std::size_t projected_;
};

/// An iterative method hit its iteration cap.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double residual)
        : Error(what + " (final residual " + std::to_string(residual) + ")"), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

}  // namespace coverbound
