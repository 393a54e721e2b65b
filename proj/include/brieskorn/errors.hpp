#pragma once

#include <stdexcept>

namespace brieskorn {

// A caller-supplied value violated an operation precondition (CLI exit 2).
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested computation exceeds the configured enumeration budget
// (CLI exit 3).  Raising the budget may make the input feasible.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed.  Never expected; any occurrence is a bug
// (CLI exit 1).
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace brieskorn
