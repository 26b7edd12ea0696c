#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ras/channel.hpp"
#include "ras/rng.hpp"

namespace ras {

/// Outcome of a subset selector. `indices` are sorted ascending.
struct SelectionResult {
  RowIndices indices;
  double capacity_bits = 0.0;
  std::uint64_t visited_nodes = 0;
  std::size_t csi_rows_used = 0;
};

enum class SelectorKind { kExhaustive, kGreedy, kBranchAndBound, kNorm };

std::string_view to_string(SelectorKind kind);
/// Accepts the CLI spellings "es", "greedy", "bab", "norm".
std::optional<SelectorKind> parse_selector(std::string_view name);

inline constexpr std::uint64_t kDefaultExhaustiveGuard = 10'000'000;

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// Enumerates every size-l subset; visited_nodes = C(nr, l).
/// Throws CapacityBudgetError when C(nr, l) > guard.
SelectionResult exhaustive_select(const ChannelMatrix& h, std::size_t l, double rho_bar,
                                  std::uint64_t guard = kDefaultExhaustiveGuard);

/// Forward greedy selection on the incremental log-det gain with rank-one
/// inverse updates. visited_nodes = sum_{k<l} (nr - k).
SelectionResult greedy_select(const ChannelMatrix& h, std::size_t l, double rho_bar);

/// Depth-first branch-and-bound; returns the same optimum as exhaustive_select.
///
/// Rows are visited in descending-norm order. A node holding k rows is pruned
/// when its capacity plus an optimistic completion cannot beat the incumbent.
/// The completion is the smaller of two admissible bounds: the (l - k) largest
/// remaining log2(1 + rho |h|^2) terms (Hadamard), and the (l - k) largest
/// single-row gains conditioned on the node's rows (gains only shrink as rows
/// are added). Nodes holding l - 1 rows are completed in closed form from
/// those gains. The incumbent starts from greedy_select.
///
/// visited_nodes counts complete subsets whose capacity was evaluated, the
/// unit exhaustive_select reports, so it never exceeds C(nr, l).
SelectionResult bab_select(const ChannelMatrix& h, std::size_t l, double rho_bar);

/// bab_select after new rows arrive. `prior` is the optimum over the rows not
/// flagged in `fresh`; any better subset must hold a fresh row, so only those
/// subsets are searched. Same result as bab_select on `h`.
SelectionResult bab_select_incremental(const ChannelMatrix& h, std::size_t l, double rho_bar,
                                       const RowIndices& prior, const std::vector<bool>& fresh);

/// greedy_select over a candidate set that only grows. Each update returns
/// what greedy_select would pick from every row added so far, but a step is
/// re-evaluated on the new rows alone until one of them displaces that step's
/// earlier pick. visited_nodes counts the gains evaluated by that update.
class IncrementalGreedy {
 public:
  IncrementalGreedy(const ChannelMatrix& h, std::size_t l, double rho_bar);

  /// Adds rows of `h` (not added before) and reselects. Indices refer to `h`.
  /// Throws std::invalid_argument while fewer than l rows have been added.
  SelectionResult update(const RowIndices& new_rows);

 private:
  void run_from(std::size_t step, SelectionResult& out);

  const ChannelMatrix* h_;
  std::size_t l_;
  double rho_;
  RowIndices rows_;
  std::vector<bool> added_;
  // Per step: inverse before the step, chosen row, its gain.
  std::vector<ComplexMatrix> b_inv_;
  RowIndices chosen_;
  std::vector<double> gain_;
};

/// The l rows of largest squared norm; visited_nodes = nr.
SelectionResult norm_select(const ChannelMatrix& h, std::size_t l, double rho_bar);

/// Dispatch by kind.
SelectionResult select(SelectorKind kind, const ChannelMatrix& h, std::size_t l, double rho_bar);

// ---------------------------------------------------------------------------
// Adaptive partial-CSI selection

/// Hands out rows of H one at a time in a fixed pseudorandom order, never
/// repeating a row.
class RowOracle {
 public:
  /// Order is a uniform random permutation drawn from `rng`.
  RowOracle(const ChannelMatrix& h, RngStream& rng);
  /// Explicit acquisition order; must be a permutation of 0..nr-1.
  RowOracle(const ChannelMatrix& h, RowIndices order);

  /// Up to `count` new row indices (fewer once exhausted).
  RowIndices acquire(std::size_t count);
  std::size_t acquired() const noexcept { return next_; }
  std::size_t total() const noexcept { return order_.size(); }
  const ChannelMatrix& channel() const noexcept { return *h_; }
  const RowIndices& order() const noexcept { return order_; }

 private:
  const ChannelMatrix* h_;
  RowIndices order_;
  std::size_t next_ = 0;
};

struct AdaptiveConfig {
  double target_capacity = 0.0;
  std::size_t batch_size = 0;
  SelectorKind inner_selector = SelectorKind::kBranchAndBound;
  std::size_t l = 0;
  double rho_bar = 0.0;

  /// Throws std::invalid_argument on a degenerate configuration.
  void validate() const;

  /// Optimal inner selector, batch of l rows per step.
  static AdaptiveConfig optimal(double target, std::size_t l, double rho_bar);
  /// Greedy inner selector, batch of 4 rows per step.
  static AdaptiveConfig greedy(double target, std::size_t l, double rho_bar);
};

struct AdaptiveStep {
  std::size_t step = 0;
  std::size_t acquired = 0;
  double capacity_bits = 0.0;
};

struct AdaptiveOutcome {
  std::size_t csi_rows_used = 0;
  RowIndices indices;
  double capacity_bits = 0.0;
  std::vector<AdaptiveStep> trace;
  bool reached = false;
  std::uint64_t visited_nodes = 0;
};

/// Acquire a batch, select l rows from everything acquired so far, repeat
/// until the selected capacity reaches the target or every row is acquired.
AdaptiveOutcome adaptive_select(RowOracle& rows, const AdaptiveConfig& cfg);

}  // namespace ras
