#pragma once

#include <stdexcept>
#include <string>

namespace matroid_forge {

/// Malformed or out-of-contract input (bad ids, nonpositive weights, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A desk-scale routine was asked to run above its configured size bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed; indicates a logic error or a violated precondition.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace matroid_forge
