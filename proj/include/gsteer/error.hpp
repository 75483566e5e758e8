#pragma once

#include <stdexcept>
#include <string>

namespace gsteer {

/// Raised when an argument violates an operation's precondition
/// (non-symmetric matrix, out-of-range purity, negative time, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a symbolic measurement limit (homodyne, blue side, no-readout)
/// is asked for as a finite covariance matrix.
class LimitNotMaterializable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidInput(message);
}

}  // namespace detail
}  // namespace gsteer
