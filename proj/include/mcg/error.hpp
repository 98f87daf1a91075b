#pragma once

#include <stdexcept>
#include <string>

namespace mcg {

// Caller-supplied value violates a documented precondition.  The CLI maps
// these to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration limit (vertex count, matching count) was exceeded.
class BoundError : public InputError {
 public:
  using InputError::InputError;
};

// A structural guarantee the library relies on failed to hold.  Exit code 3.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mcg
