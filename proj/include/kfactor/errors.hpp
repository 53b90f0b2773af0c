#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kfactor {

/// Argument outside an operation's mathematical domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A table or configured budget is too small for the request.
/// Carries the limit that would have been sufficient.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t required_limit)
      : std::runtime_error(what), required_limit_(required_limit) {}

  std::uint64_t required_limit() const noexcept { return required_limit_; }

 private:
  std::uint64_t required_limit_;
};

/// Input violates the validity window of an asymptotic formula.
class WindowError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iteration failed to converge within its budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File read/write failure, including rejected cache files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kfactor
