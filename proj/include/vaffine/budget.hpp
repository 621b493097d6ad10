#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace vaffine {

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t limit)
      : std::runtime_error("step budget of " + std::to_string(limit) + " reduction steps exceeded") {}
};

// Counts reduction steps of one computation; throws once the limit is passed.
class StepBudget {
 public:
  explicit StepBudget(std::uint64_t limit = std::numeric_limits<std::uint64_t>::max())
      : limit_(limit) {}

  void charge(std::uint64_t steps = 1) {
    used_ += steps;
    if (used_ > limit_) throw BudgetExceeded(limit_);
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace vaffine
