#pragma once

#include <stdexcept>
#include <string>

namespace torschain {

// Malformed or inconsistent caller input (bad shapes, unknown names, ordering
// violations, objects that fail a precondition).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive search would exceed its configured size guard.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two routes that must agree did not. Signals a bug or a universe that is not
// representation-finite in the way the library assumes.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A structural claim failed on concrete data (e.g. a cover whose quasisemistable
// category is not generated by a single brick).
class ViolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace torschain
