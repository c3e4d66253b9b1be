#pragma once

#include <stdexcept>
#include <string>

namespace dnoether {

// Raised when the input violates a standing assumption on A.
struct AssumptionViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotFullRank : AssumptionViolation {
  using AssumptionViolation::AssumptionViolation;
};

struct NotStronglyConvex : AssumptionViolation {
  using AssumptionViolation::AssumptionViolation;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedDimension : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A certified search window could not be reached within the point budget.
struct InferenceBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A self-check derived from a proven identity failed; the result must not be trusted.
struct InternalAssertion : std::logic_error {
  using std::logic_error::logic_error;
};

struct DifferentLattice : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptyB : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void check(bool ok, const std::string& what) {
  if (!ok) throw InternalAssertion(what);
}

}  // namespace dnoether
