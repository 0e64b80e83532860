#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace shannon1d {

/// An integral (or a truncation sequence) did not reach its tolerance within
/// the allowed work. Carries the error estimate that was actually achieved.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved_error, double requested_tolerance)
      : std::runtime_error(describe(what, achieved_error, requested_tolerance)),
        achieved_error_(achieved_error),
        requested_tolerance_(requested_tolerance) {}

  double achieved_error() const noexcept { return achieved_error_; }
  double requested_tolerance() const noexcept { return requested_tolerance_; }

 private:
  static std::string describe(const std::string& what, double achieved, double requested) {
    char buffer[96];
    std::snprintf(buffer, sizeof buffer, " (achieved error %.3e, requested %.3e)", achieved, requested);
    return what + buffer;
  }

  double achieved_error_;
  double requested_tolerance_;
};

/// A physical inequality (entropic or Kennard bound) failed beyond tolerance.
/// Signals a numerics bug rather than a user error.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Root finding was asked to search an interval without a sign change.
class BracketError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace shannon1d
