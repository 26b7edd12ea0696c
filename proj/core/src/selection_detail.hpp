#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ras/channel.hpp"

namespace ras::detail {

inline void check_selection_args(const ChannelMatrix& h, std::size_t l, double rho_bar,
                                 const char* who) {
  if (l == 0) throw std::invalid_argument(std::string(who) + ": l must be >= 1");
  if (l > h.nr()) {
    throw std::invalid_argument(std::string(who) + ": l=" + std::to_string(l) +
                                " exceeds nr=" + std::to_string(h.nr()));
  }
  if (!(rho_bar > 0.0)) throw std::invalid_argument(std::string(who) + ": rho_bar must be positive");
}

/// Shared ordering: higher capacity wins; near-ties go to the lexicographically
/// smaller (sorted) index set.
inline bool better_subset(double cap, const RowIndices& idx, double best_cap,
                          const RowIndices& best_idx) {
  if (best_idx.empty()) return true;
  const double tol = 1e-12 * std::max(1.0, std::abs(best_cap));
  if (cap > best_cap + tol) return true;
  if (cap < best_cap - tol) return false;
  return std::lexicographical_compare(idx.begin(), idx.end(), best_idx.begin(), best_idx.end());
}

}  // namespace ras::detail
