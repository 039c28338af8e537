#pragma once

#include <exception>
#include <string>
#include <string_view>

namespace parlin {

/// Base class for library errors. The message is mutable so that callers
/// higher on the stack (notably the execution engine) can attach context
/// such as the failing partition without losing the concrete error type.
class Error : public std::exception {
 public:
  explicit Error(std::string message) : message_(std::move(message)) {}

  const char* what() const noexcept override { return message_.c_str(); }

  void add_context(std::string_view context) {
    message_ = std::string(context) + ": " + message_;
  }

 private:
  std::string message_;
};

/// A partition task failed with an exception the engine does not know about.
class EngineError : public Error {
  using Error::Error;
};

/// A driver-side memory budget (e.g. the collect cap) would be exceeded.
class ResourceLimitError : public Error {
  using Error::Error;
};

/// Malformed or non-finite input data.
class DataError : public Error {
  using Error::Error;
};

/// The requested shape is outside what the operation supports
/// (gram cap, index ranges that do not fit an int, ...).
class UnsupportedShapeError : public Error {
  using Error::Error;
};

/// An iterative method failed to converge within its budget.
class ConvergenceError : public Error {
  using Error::Error;
};

/// A Cholesky factorization hit a non-positive pivot.
class RankDeficiencyError : public Error {
  using Error::Error;
};

/// A solver produced a non-finite value.
class NumericalError : public Error {
  using Error::Error;
};

/// Dual divergence in a constrained solver: the problem looks infeasible.
class InfeasibleError : public ConvergenceError {
  using ConvergenceError::ConvergenceError;
};

}  // namespace parlin
