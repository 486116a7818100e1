#pragma once

#include <stdexcept>
#include <string>

namespace lavatube {

/// Input or configuration that violates a documented invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No relay path exists between two communication nodes.
class DisconnectedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

inline void require_positive(double v, const char* name) {
  if (!(v > 0.0)) throw ValidationError(std::string(name) + " must be positive");
}

}  // namespace detail
}  // namespace lavatube
