#include "ras/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "ras/capacity.hpp"
#include "ras/errors.hpp"
#include "selection_detail.hpp"

namespace ras {

using detail::better_subset;
using detail::check_selection_args;

std::string_view to_string(SelectorKind kind) {
  switch (kind) {
    case SelectorKind::kExhaustive: return "es";
    case SelectorKind::kGreedy: return "greedy";
    case SelectorKind::kBranchAndBound: return "bab";
    case SelectorKind::kNorm: return "norm";
  }
  return "unknown";
}

std::optional<SelectorKind> parse_selector(std::string_view name) {
  if (name == "es" || name == "exhaustive") return SelectorKind::kExhaustive;
  if (name == "greedy") return SelectorKind::kGreedy;
  if (name == "bab") return SelectorKind::kBranchAndBound;
  if (name == "norm") return SelectorKind::kNorm;
  return std::nullopt;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  __extension__ using Wide = unsigned __int128;
  Wide result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // C(n - k + i, i) is integral at every step.
    result = result * (n - k + i) / i;
    if (result > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(result);
}

namespace {

double subset_capacity(const ChannelMatrix& h, const RowIndices& sorted_idx, double rho_bar) {
  return capacity(row_subset(h, sorted_idx), rho_bar);
}

SelectionResult finish(const ChannelMatrix& h, RowIndices idx, double rho_bar,
                       std::uint64_t visited) {
  std::sort(idx.begin(), idx.end());
  SelectionResult out;
  out.capacity_bits = subset_capacity(h, idx, rho_bar);
  out.indices = std::move(idx);
  out.visited_nodes = visited;
  out.csi_rows_used = h.nr();
  return out;
}

}  // namespace

SelectionResult exhaustive_select(const ChannelMatrix& h, std::size_t l, double rho_bar,
                                  std::uint64_t guard) {
  check_selection_args(h, l, rho_bar, "exhaustive_select");
  const std::size_t nr = h.nr();
  const std::uint64_t total = binomial(nr, l);
  if (total > guard) throw CapacityBudgetError(total, guard);

  RowIndices current(l);
  std::iota(current.begin(), current.end(), std::size_t{0});
  RowIndices best;
  double best_cap = -std::numeric_limits<double>::infinity();
  std::uint64_t visited = 0;
  while (true) {
    ++visited;
    const double cap = subset_capacity(h, current, rho_bar);
    if (better_subset(cap, current, best_cap, best)) {
      best_cap = cap;
      best = current;
    }
    // Next combination in lexicographic order.
    std::size_t pos = l;
    while (pos > 0 && current[pos - 1] == nr - l + (pos - 1)) --pos;
    if (pos == 0) break;
    ++current[pos - 1];
    for (std::size_t k = pos; k < l; ++k) current[k] = current[k - 1] + 1;
  }
  SelectionResult out;
  out.indices = std::move(best);
  out.capacity_bits = best_cap;
  out.visited_nodes = visited;
  out.csi_rows_used = nr;
  return out;
}

SelectionResult greedy_select(const ChannelMatrix& h, std::size_t l, double rho_bar) {
  check_selection_args(h, l, rho_bar, "greedy_select");
  const ComplexMatrix& hm = h.entries();
  const Eigen::Index nt = hm.cols();
  const std::size_t nr = h.nr();

  ComplexMatrix b_inv = ComplexMatrix::Identity(nt, nt);
  std::vector<bool> taken(nr, false);
  RowIndices chosen;
  chosen.reserve(l);
  std::uint64_t visited = 0;

  for (std::size_t step = 0; step < l; ++step) {
    // q_i = rho * h_i B^{-1} h_i^H for every row at once.
    const Eigen::VectorXd q =
        rho_bar * (hm * b_inv).cwiseProduct(hm.conjugate()).rowwise().sum().real();
    std::size_t best = nr;
    double best_q = -1.0;
    for (std::size_t i = 0; i < nr; ++i) {
      if (taken[i]) continue;
      ++visited;
      if (q(static_cast<Eigen::Index>(i)) > best_q) {
        best_q = q(static_cast<Eigen::Index>(i));
        best = i;
      }
    }
    taken[best] = true;
    chosen.push_back(best);
    const Eigen::VectorXcd v = b_inv * hm.row(static_cast<Eigen::Index>(best)).adjoint();
    b_inv -= (rho_bar / (1.0 + best_q)) * (v * v.adjoint());
  }
  return finish(h, std::move(chosen), rho_bar, visited);
}

namespace {

/// Depth-first search state for bab_select. Rows are held in descending-norm order.
class BranchAndBound {
 public:
  BranchAndBound(const ChannelMatrix& h, std::size_t l, double rho_bar)
      : h_(h), l_(l), rho_(rho_bar), n_(h.nr()) {
    const auto norms = row_norms_sq(h);
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return norms[a] > norms[b]; });
    sorted_.resize(static_cast<Eigen::Index>(n_), h.entries().cols());
    for (std::size_t p = 0; p < n_; ++p) {
      sorted_.row(static_cast<Eigen::Index>(p)) = h.entries().row(static_cast<Eigen::Index>(order_[p]));
    }
    const Eigen::Index nt = h.entries().cols();
    b_inv_.assign(l_, ComplexMatrix::Identity(nt, nt));
    gains_.assign(l_, std::vector<double>(n_, 0.0));
    suffix_.assign(l_, std::vector<double>(n_, 0.0));
    path_.reserve(l_);
    norm_prefix_.assign(n_ + 1, 0.0);
    for (std::size_t p = 0; p < n_; ++p) {
      norm_prefix_[p + 1] = norm_prefix_[p] + std::log1p(rho_bar * norms[order_[p]]) / std::numbers::ln2;
    }
  }

  void seed_incumbent(const SelectionResult& r) { offer(r.capacity_bits, r.indices); }

  // Only subsets holding at least one flagged row are searched.
  void restrict_to_fresh(const std::vector<bool>& fresh) {
    fresh_after_.assign(n_ + 1, 0);
    for (std::size_t p = n_; p-- > 0;) fresh_after_[p] = fresh_after_[p + 1] + (fresh[order_[p]] ? 1 : 0);
  }

  void run() {
    if (!fresh_after_.empty() && fresh_after_[0] == 0) return;
    visit(0, 0, 0.0);
  }

  std::uint64_t visited() const { return visited_; }
  const RowIndices& best() const { return best_idx_; }

 private:
  RowIndices sorted_original(std::size_t extra_pos = SIZE_MAX) const {
    RowIndices idx;
    idx.reserve(path_.size() + 1);
    for (std::size_t p : path_) idx.push_back(order_[p]);
    if (extra_pos != SIZE_MAX) idx.push_back(order_[extra_pos]);
    std::sort(idx.begin(), idx.end());
    return idx;
  }

  void offer(double cap, RowIndices idx) {
    if (better_subset(cap, idx, best_cap_, best_idx_)) {
      best_cap_ = cap;
      best_idx_ = std::move(idx);
    }
  }

  // Whether some completion of the path through position p holds a fresh row.
  bool reaches_fresh(std::size_t p) const {
    return fresh_after_.empty() || path_fresh_ > 0 || fresh_after_[p] > 0;
  }

  bool is_fresh(std::size_t p) const { return fresh_after_[p] != fresh_after_[p + 1]; }

  bool hopeless(double optimistic) const {
    const double tol = 1e-12 * std::max(1.0, std::abs(best_cap_));
    return optimistic < best_cap_ - tol;
  }

  // depth = rows already chosen (the path), start = first candidate position.
  void visit(std::size_t depth, std::size_t start, double cap) {
    const std::size_t need = l_ - depth;
    const std::size_t avail = n_ - start;

    if (avail == need) {
      // Only one completion remains.
      ++visited_;
      RowIndices idx = sorted_original();
      for (std::size_t p = start; p < n_; ++p) idx.push_back(order_[p]);
      std::sort(idx.begin(), idx.end());
      const double cap_all = capacity(row_subset(h_, idx), rho_);
      offer(cap_all, std::move(idx));
      return;
    }

    // Conditional single-row gains log2(1 + rho h_j B^{-1} h_j^H), B = I + rho * Gram(path).
    const auto cand = sorted_.middleRows(static_cast<Eigen::Index>(start),
                                         static_cast<Eigen::Index>(avail));
    const Eigen::VectorXd q =
        rho_ * (cand * b_inv_[depth]).cwiseProduct(cand.conjugate()).rowwise().sum().real();
    std::vector<double>& g = gains_[depth];
    for (std::size_t j = 0; j < avail; ++j) {
      g[start + j] = std::log1p(q(static_cast<Eigen::Index>(j))) / std::numbers::ln2;
    }

    if (need == 1) {
      // Leaves follow from the determinant lemma: C(path + j) = cap + g_j.
      for (std::size_t p = start; p < n_; ++p) {
        if (!reaches_fresh(p)) break;
        if (!fresh_after_.empty() && path_fresh_ == 0 && !is_fresh(p)) continue;
        ++visited_;
        const double leaf = cap + g[p];
        if (hopeless(leaf)) continue;
        offer(leaf, sorted_original(p));
      }
      return;
    }

    // suffix[p]: sum of the need - 1 largest gains after p. Gains only shrink as
    // rows join the path, so this bounds the completion as well.
    std::vector<double>& suffix = suffix_[depth];
    {
      std::priority_queue<double, std::vector<double>, std::greater<>> top;
      double sum = 0.0;
      for (std::size_t p = n_; p-- > start;) {
        suffix[p] = sum;
        top.push(g[p]);
        sum += g[p];
        if (top.size() > need - 1) {
          sum -= top.top();
          top.pop();
        }
      }
    }
    for (std::size_t p = start; p + need <= n_; ++p) {
      if (!reaches_fresh(p)) break;
      // Hadamard: each further row adds at most log2(1 + rho |h|^2); rows are in
      // descending-norm order, so the best completion uses the next need - 1.
      const double hadamard = norm_prefix_[p + need] - norm_prefix_[p + 1];
      const double optimistic = cap + g[p] + std::min(hadamard, suffix[p]);
      if (hopeless(optimistic)) {
        if (hopeless(cap + norm_prefix_[p + need] - norm_prefix_[p])) break;
        continue;
      }
      const auto row = sorted_.row(static_cast<Eigen::Index>(p));
      const Eigen::VectorXcd v = b_inv_[depth] * row.adjoint();
      const double qp = std::expm1(g[p] * std::numbers::ln2);
      b_inv_[depth + 1] = b_inv_[depth] - (rho_ / (1.0 + qp)) * (v * v.adjoint());
      const std::size_t fresh_here = !fresh_after_.empty() && is_fresh(p) ? 1 : 0;
      path_.push_back(p);
      path_fresh_ += fresh_here;
      visit(depth + 1, p + 1, cap + g[p]);
      path_fresh_ -= fresh_here;
      path_.pop_back();
    }
  }

  const ChannelMatrix& h_;
  std::size_t l_;
  double rho_;
  std::size_t n_;
  RowIndices order_;
  ComplexMatrix sorted_;
  std::vector<ComplexMatrix> b_inv_;
  std::vector<std::vector<double>> gains_;
  std::vector<std::vector<double>> suffix_;
  std::vector<double> norm_prefix_;
  RowIndices path_;
  std::vector<std::size_t> fresh_after_;
  std::size_t path_fresh_ = 0;
  RowIndices best_idx_;
  double best_cap_ = -std::numeric_limits<double>::infinity();
  std::uint64_t visited_ = 0;
};

}  // namespace

SelectionResult bab_select(const ChannelMatrix& h, std::size_t l, double rho_bar) {
  check_selection_args(h, l, rho_bar, "bab_select");
  const std::size_t nr = h.nr();
  if (l == nr) {
    RowIndices all(nr);
    std::iota(all.begin(), all.end(), std::size_t{0});
    return finish(h, std::move(all), rho_bar, 1);
  }
  BranchAndBound search(h, l, rho_bar);
  search.seed_incumbent(greedy_select(h, l, rho_bar));
  search.run();
  return finish(h, search.best(), rho_bar, search.visited());
}

SelectionResult bab_select_incremental(const ChannelMatrix& h, std::size_t l, double rho_bar,
                                       const RowIndices& prior, const std::vector<bool>& fresh) {
  check_selection_args(h, l, rho_bar, "bab_select_incremental");
  if (fresh.size() != h.nr()) {
    throw std::invalid_argument("bab_select_incremental: fresh mask must have one entry per row");
  }
  if (prior.size() != l) throw std::invalid_argument("bab_select_incremental: prior must hold l rows");
  RowIndices prior_sorted = prior;
  std::sort(prior_sorted.begin(), prior_sorted.end());
  if (l == h.nr()) return finish(h, std::move(prior_sorted), rho_bar, 1);

  BranchAndBound search(h, l, rho_bar);
  search.seed_incumbent(greedy_select(h, l, rho_bar));
  search.seed_incumbent({prior_sorted, subset_capacity(h, prior_sorted, rho_bar), 0, 0});
  search.restrict_to_fresh(fresh);
  search.run();
  return finish(h, search.best(), rho_bar, search.visited());
}

IncrementalGreedy::IncrementalGreedy(const ChannelMatrix& h, std::size_t l, double rho_bar)
    : h_(&h), l_(l), rho_(rho_bar), added_(h.nr(), false) {
  detail::check_selection_args(h, l, rho_bar, "IncrementalGreedy");
}

void IncrementalGreedy::run_from(std::size_t step, SelectionResult& out) {
  const ComplexMatrix& hm = h_->entries();
  const Eigen::Index nt = hm.cols();
  chosen_.resize(step);
  gain_.resize(step);
  b_inv_.resize(step + 1, ComplexMatrix::Identity(nt, nt));
  std::vector<bool> taken(h_->nr(), false);
  for (std::size_t r : chosen_) taken[r] = true;
  for (std::size_t k = step; k < l_; ++k) {
    const ComplexMatrix& b = b_inv_[k];
    std::size_t best = h_->nr();
    double best_q = -1.0;
    for (std::size_t r : rows_) {
      if (taken[r]) continue;
      ++out.visited_nodes;
      const auto row = hm.row(static_cast<Eigen::Index>(r));
      const double q = rho_ * (row * b * row.adjoint())(0, 0).real();
      if (q > best_q || (q == best_q && r < best)) {
        best_q = q;
        best = r;
      }
    }
    taken[best] = true;
    chosen_.push_back(best);
    gain_.push_back(best_q);
    const Eigen::VectorXcd v = b * hm.row(static_cast<Eigen::Index>(best)).adjoint();
    b_inv_.push_back(b - (rho_ / (1.0 + best_q)) * (v * v.adjoint()));
  }
}

SelectionResult IncrementalGreedy::update(const RowIndices& new_rows) {
  for (std::size_t r : new_rows) {
    if (r >= h_->nr() || added_[r]) {
      throw std::invalid_argument("IncrementalGreedy: row " + std::to_string(r) +
                                  " is out of range or already added");
    }
    added_[r] = true;
    rows_.push_back(r);
  }
  if (rows_.size() < l_) {
    throw std::invalid_argument("IncrementalGreedy: fewer than l rows available");
  }

  SelectionResult out;
  std::size_t diverge = chosen_.empty() ? 0 : l_;
  const ComplexMatrix& hm = h_->entries();
  for (std::size_t k = 0; k < chosen_.size() && diverge == l_; ++k) {
    const ComplexMatrix& b = b_inv_[k];
    for (std::size_t r : new_rows) {
      ++out.visited_nodes;
      const auto row = hm.row(static_cast<Eigen::Index>(r));
      const double q = rho_ * (row * b * row.adjoint())(0, 0).real();
      if (q > gain_[k] || (q == gain_[k] && r < chosen_[k])) {
        diverge = k;
        break;
      }
    }
  }
  if (diverge < l_) run_from(diverge, out);

  out.indices = chosen_;
  std::sort(out.indices.begin(), out.indices.end());
  out.capacity_bits = subset_capacity(*h_, out.indices, rho_);
  out.csi_rows_used = rows_.size();
  return out;
}

SelectionResult norm_select(const ChannelMatrix& h, std::size_t l, double rho_bar) {
  check_selection_args(h, l, rho_bar, "norm_select");
  const auto norms = row_norms_sq(h);
  RowIndices order(h.nr());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return norms[a] > norms[b]; });
  order.resize(l);
  return finish(h, std::move(order), rho_bar, h.nr());
}

SelectionResult select(SelectorKind kind, const ChannelMatrix& h, std::size_t l, double rho_bar) {
  switch (kind) {
    case SelectorKind::kExhaustive: return exhaustive_select(h, l, rho_bar);
    case SelectorKind::kGreedy: return greedy_select(h, l, rho_bar);
    case SelectorKind::kBranchAndBound: return bab_select(h, l, rho_bar);
    case SelectorKind::kNorm: return norm_select(h, l, rho_bar);
  }
  throw std::invalid_argument("select: unknown selector");
}

}  // namespace ras
