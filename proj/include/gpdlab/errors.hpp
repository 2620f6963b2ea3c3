#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace gpdlab {

/// Structural problem in an input artifact (bad index, wrong shape, ...).
/// Distinct from groupoid-law violations, which are reported by
/// validate_groupoid rather than thrown.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg, std::string where = "")
      : std::runtime_error(where.empty() ? msg : msg + " (" + where + ")"),
        pointer(std::move(where)) {}
  std::string pointer;  // JSON-pointer-ish location when known
};

/// Caller violated an operation precondition (endpoint mismatch, wrong
/// boundary, non-linear input to span_from_linear, ...).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A search or construction ran out of its configured budget. Never used to
/// signal a negative result.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Step counter shared by backtracking searches. Exhausting it throws; a
/// search that returns normally is complete.
class Budget {
 public:
  static constexpr std::uint64_t kDefaultSteps = 1'000'000;

  explicit Budget(std::uint64_t steps = kDefaultSteps) : remaining_(steps) {}

  void tick(std::uint64_t cost = 1) {
    if (cost > remaining_) throw BudgetExceeded("search budget exceeded");
    remaining_ -= cost;
  }

  std::uint64_t remaining() const { return remaining_; }

 private:
  std::uint64_t remaining_;
};

}  // namespace gpdlab
