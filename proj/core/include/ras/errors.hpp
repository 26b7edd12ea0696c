#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ras {

/// Raised when an exhaustive enumeration would exceed its configured size guard.
class CapacityBudgetError : public std::runtime_error {
 public:
  CapacityBudgetError(std::uint64_t subsets, std::uint64_t guard)
      : std::runtime_error("exhaustive search over " + std::to_string(subsets) +
                           " subsets exceeds the guard of " + std::to_string(guard)),
        subsets_(subsets) {}

  std::uint64_t subsets() const noexcept { return subsets_; }

 private:
  std::uint64_t subsets_;
};

/// Quadrature or root-finding failed to reach its tolerance.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ras
