#pragma once

#include <stdexcept>
#include <string>

namespace rgg {

/// Input violates a documented precondition (bad distribution mass,
/// overlapping point sets, non-finite coordinates, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact solver hit its configured node or size cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedDimension : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rgg
