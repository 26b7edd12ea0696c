#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ras/capacity.hpp"
#include "ras/selection.hpp"

namespace ras {

RowOracle::RowOracle(const ChannelMatrix& h, RngStream& rng) : h_(&h), order_(h.nr()) {
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  // Fisher-Yates with the stream's own integer draws for portability.
  for (std::size_t i = order_.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(order_[i - 1], order_[j]);
  }
}

RowOracle::RowOracle(const ChannelMatrix& h, RowIndices order) : h_(&h), order_(std::move(order)) {
  RowIndices check = order_;
  std::sort(check.begin(), check.end());
  bool ok = check.size() == h.nr();
  for (std::size_t i = 0; ok && i < check.size(); ++i) ok = check[i] == i;
  if (!ok) throw std::invalid_argument("RowOracle: order must be a permutation of the row indices");
}

RowIndices RowOracle::acquire(std::size_t count) {
  const std::size_t take = std::min(count, order_.size() - next_);
  RowIndices out(order_.begin() + static_cast<std::ptrdiff_t>(next_),
                 order_.begin() + static_cast<std::ptrdiff_t>(next_ + take));
  next_ += take;
  return out;
}

void AdaptiveConfig::validate() const {
  if (batch_size == 0) throw std::invalid_argument("adaptive: batch_size must be >= 1");
  if (!(target_capacity > 0.0)) throw std::invalid_argument("adaptive: target capacity must be positive");
  if (l == 0) throw std::invalid_argument("adaptive: l must be >= 1");
  if (!(rho_bar > 0.0)) throw std::invalid_argument("adaptive: rho_bar must be positive");
  const bool optimal = inner_selector == SelectorKind::kExhaustive ||
                       inner_selector == SelectorKind::kBranchAndBound;
  if (optimal && batch_size > l) {
    throw std::invalid_argument("adaptive: batch_size " + std::to_string(batch_size) +
                                " exceeds the " + std::to_string(l) + " available RF chains");
  }
}

AdaptiveConfig AdaptiveConfig::optimal(double target, std::size_t l, double rho_bar) {
  return {target, l, SelectorKind::kBranchAndBound, l, rho_bar};
}

AdaptiveConfig AdaptiveConfig::greedy(double target, std::size_t l, double rho_bar) {
  return {target, 4, SelectorKind::kGreedy, l, rho_bar};
}

AdaptiveOutcome adaptive_select(RowOracle& rows, const AdaptiveConfig& cfg) {
  cfg.validate();
  const ChannelMatrix& h = rows.channel();
  if (cfg.l > h.nr()) {
    throw std::invalid_argument("adaptive: l exceeds the number of receive antennas");
  }

  AdaptiveOutcome out;
  RowIndices acquired;
  acquired.reserve(h.nr());
  std::size_t step = 0;
  // Greedy reuses its earlier steps across batches; rows wait here until the
  // first selection.
  IncrementalGreedy greedy(h, cfg.l, cfg.rho_bar);
  RowIndices pending;

  while (out.capacity_bits < cfg.target_capacity && rows.acquired() < rows.total()) {
    ++step;
    const RowIndices batch = rows.acquire(cfg.batch_size);
    acquired.insert(acquired.end(), batch.begin(), batch.end());
    pending.insert(pending.end(), batch.begin(), batch.end());
    std::sort(acquired.begin(), acquired.end());

    if (acquired.size() >= cfg.l) {
      auto local = [&](std::size_t row) {
        return static_cast<std::size_t>(std::lower_bound(acquired.begin(), acquired.end(), row) -
                                        acquired.begin());
      };
      // Inner selection over the acquired rows; indices end up referring to h.
      SelectionResult r;
      if (cfg.inner_selector == SelectorKind::kGreedy) {
        r = greedy.update(pending);
        pending.clear();
      } else {
        const ChannelMatrix sub = row_subset(h, acquired);
        if (cfg.inner_selector == SelectorKind::kBranchAndBound && !out.indices.empty()) {
          std::vector<bool> fresh(acquired.size(), false);
          for (std::size_t row : batch) fresh[local(row)] = true;
          RowIndices prior;
          for (std::size_t row : out.indices) prior.push_back(local(row));
          r = bab_select_incremental(sub, cfg.l, cfg.rho_bar, prior, fresh);
        } else {
          r = select(cfg.inner_selector, sub, cfg.l, cfg.rho_bar);
        }
        for (std::size_t& k : r.indices) k = acquired[k];
      }
      out.visited_nodes += r.visited_nodes;
      // Optimal selectors cannot regress on a superset; greedy can, and the
      // previous subset is still available then.
      if (out.indices.empty() || r.capacity_bits > out.capacity_bits) {
        out.indices = std::move(r.indices);
        out.capacity_bits = r.capacity_bits;
      }
    }
    out.trace.push_back({step, acquired.size(), out.capacity_bits});
  }

  out.csi_rows_used = acquired.size();
  out.reached = out.capacity_bits >= cfg.target_capacity;
  return out;
}

}  // namespace ras
