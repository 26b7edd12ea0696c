#include "ras/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ras/capacity.hpp"
#include "ras/channel.hpp"
#include "ras/errors.hpp"
#include "ras/sampling.hpp"
#include "parallel.hpp"

namespace ras {

using detail::for_each_trial;

namespace {

bool is_optimal(SelectorKind kind) {
  return kind == SelectorKind::kExhaustive || kind == SelectorKind::kBranchAndBound;
}

RngStream stream(const ExperimentConfig& cfg, StreamPurpose purpose, std::size_t trial) {
  return derive_stream(cfg.master_seed, stream_id_for(purpose, trial));
}

ChannelMatrix trial_channel(const ExperimentConfig& cfg, std::size_t trial) {
  RngStream rng = stream(cfg, StreamPurpose::kChannel, trial);
  return sample_channel(rng, cfg.nr, cfg.nt);
}

double sample_bound(BoundKind kind, RngStream& rng, std::size_t nr, std::size_t nt, std::size_t l,
                    double rho_bar) {
  return kind == BoundKind::kBeamforming ? sample_bf_bound(rng, nr, nt, l, rho_bar)
                                         : sample_mrc_bound(rng, nr, nt, l, rho_bar);
}

/// Per-trial values laid out [snr][trial].
struct Grid {
  Grid(std::size_t rows, std::size_t trials) : trials(trials), data(rows * trials, 0.0) {}
  double& at(std::size_t row, std::size_t trial) { return data[row * trials + trial]; }
  std::span<const double> row(std::size_t r) const {
    return {data.data() + r * trials, trials};
  }
  std::size_t trials;
  std::vector<double> data;
};

}  // namespace

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
  if (trials == 0) fail("trials must be >= 1");
  if (nr == 0) fail("nr must be >= 1");
  if (nt == 0) fail("nt must be >= 1");
  if (l == 0) fail("l must be >= 1");
  if (l > nr) fail("l=" + std::to_string(l) + " exceeds nr=" + std::to_string(nr));
  if (snr_db_grid.empty()) fail("snr grid must not be empty");
  for (double s : snr_db_grid) {
    if (!std::isfinite(s)) fail("snr values must be finite");
  }
  if (!(eta >= 0.0 && eta < 1.0)) fail("eta must lie in [0, 1)");
  for (std::size_t v : csi_grid) {
    if (v < l || v > nr) {
      fail("csi grid value " + std::to_string(v) + " must satisfy l <= value <= nr");
    }
  }
  if (is_optimal(selector) && batch_size > l) {
    fail("batch size " + std::to_string(batch_size) + " exceeds l=" + std::to_string(l));
  }
  if (target.mode == TargetSpec::Mode::kValue && !(target.value > 0.0)) {
    fail("target value must be positive");
  }
  if (selector == SelectorKind::kExhaustive) {
    const std::uint64_t subsets = binomial(nr, l);
    if (subsets > kDefaultExhaustiveGuard) throw CapacityBudgetError(subsets, kDefaultExhaustiveGuard);
  }
}

std::size_t ExperimentConfig::effective_batch_size() const {
  if (batch_size != 0) return batch_size;
  return is_optimal(selector) ? l : 4;
}

BoundKind default_bound_kind(std::size_t nt, std::size_t l) {
  return l <= nt ? BoundKind::kBeamforming : BoundKind::kMrc;
}

GaussianBound asymptotic_bound(std::size_t nr, std::size_t nt, std::size_t l, double rho_bar) {
  return default_bound_kind(nt, l) == BoundKind::kBeamforming ? bf_bound_params(nr, nt, l, rho_bar)
                                                              : mrc_bound_params(nr, nt, l, rho_bar);
}

double resolve_target(const TargetSpec& spec, std::size_t nr, std::size_t nt, std::size_t l,
                      double rho_bar) {
  if (spec.mode == TargetSpec::Mode::kValue) return spec.value;
  if (l <= nt) return 0.9 * approx_ergodic_capacity(nr, nt, l, rho_bar);
  return 0.85 * mrc_bound_params(nr, nt, l, rho_bar).mean;
}

std::vector<ErgodicRow> run_ergodic(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::size_t ns = cfg.snr_db_grid.size();
  const BoundKind kind = default_bound_kind(cfg.nt, cfg.l);
  Grid cap(ns, cfg.trials), visited(ns, cfg.trials), bound(ns, cfg.trials);

  for_each_trial(cfg.trials, cfg.threads, [&](std::size_t t) {
    const ChannelMatrix h = trial_channel(cfg, t);
    for (std::size_t s = 0; s < ns; ++s) {
      const double rho = db_to_linear(cfg.snr_db_grid[s]);
      const SelectionResult r = select(cfg.selector, h, cfg.l, rho);
      cap.at(s, t) = r.capacity_bits;
      visited.at(s, t) = static_cast<double>(r.visited_nodes);
      // Same stream at every SNR: common random numbers across the grid.
      RngStream rng = stream(cfg, StreamPurpose::kBoundSample, t);
      bound.at(s, t) = sample_bound(kind, rng, cfg.nr, cfg.nt, cfg.l, rho);
    }
  });

  std::vector<ErgodicRow> rows;
  for (std::size_t s = 0; s < ns; ++s) {
    const double rho = db_to_linear(cfg.snr_db_grid[s]);
    const GaussianBound asym = asymptotic_bound(cfg.nr, cfg.nt, cfg.l, rho);
    ErgodicRow row;
    row.snr_db = cfg.snr_db_grid[s];
    row.bound_kind = kind;
    row.capacity = summarize(cap.row(s));
    row.bound_samples = summarize(bound.row(s));
    row.mean_visited_nodes = summarize(visited.row(s)).mean;
    row.asym_mean = asym.mean;
    row.asym_variance = asym.variance;
    if (cfg.l <= cfg.nt) row.approx_capacity = approx_ergodic_capacity(cfg.nr, cfg.nt, cfg.l, rho);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<CdfResult> run_cdf(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::size_t ns = cfg.snr_db_grid.size();
  const BoundKind kind = default_bound_kind(cfg.nt, cfg.l);
  Grid bound(ns, cfg.trials);

  for_each_trial(cfg.trials, cfg.threads, [&](std::size_t t) {
    for (std::size_t s = 0; s < ns; ++s) {
      RngStream rng = stream(cfg, StreamPurpose::kBoundSample, t);
      bound.at(s, t) = sample_bound(kind, rng, cfg.nr, cfg.nt, cfg.l, db_to_linear(cfg.snr_db_grid[s]));
    }
  });

  std::vector<CdfResult> out;
  for (std::size_t s = 0; s < ns; ++s) {
    const GaussianBound asym = asymptotic_bound(cfg.nr, cfg.nt, cfg.l, db_to_linear(cfg.snr_db_grid[s]));
    CdfResult r;
    r.snr_db = cfg.snr_db_grid[s];
    r.bound_kind = kind;
    r.samples = summarize(bound.row(s), true);
    r.gaussian_mean = asym.mean;
    r.gaussian_variance = asym.variance;
    r.ks = ks_distance(r.samples.ecdf_x, asym.mean, asym.variance);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SweepRow> sweep_csi(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.csi_grid.empty()) throw std::invalid_argument("sweep_csi: csi grid must not be empty");
  const std::size_t ns = cfg.snr_db_grid.size();
  const std::size_t ng = cfg.csi_grid.size();
  Grid full(ns, cfg.trials), partial(ns * ng, cfg.trials);

  for_each_trial(cfg.trials, cfg.threads, [&](std::size_t t) {
    const ChannelMatrix h = trial_channel(cfg, t);
    RngStream order_rng = stream(cfg, StreamPurpose::kRowOrder, t);
    const RowOracle oracle(h, order_rng);
    for (std::size_t s = 0; s < ns; ++s) {
      const double rho = db_to_linear(cfg.snr_db_grid[s]);
      full.at(s, t) = select(cfg.selector, h, cfg.l, rho).capacity_bits;
      for (std::size_t g = 0; g < ng; ++g) {
        const std::size_t upsilon = cfg.csi_grid[g];
        RowIndices prefix(oracle.order().begin(),
                          oracle.order().begin() + static_cast<std::ptrdiff_t>(upsilon));
        std::sort(prefix.begin(), prefix.end());
        const ChannelMatrix sub = row_subset(h, prefix);
        partial.at(s * ng + g, t) = select(cfg.selector, sub, cfg.l, rho).capacity_bits;
      }
    }
  });

  const EfficiencyParams eff(cfg.eta);
  std::vector<SweepRow> rows;
  for (std::size_t s = 0; s < ns; ++s) {
    const double rho = db_to_linear(cfg.snr_db_grid[s]);
    const double full_mean = summarize(full.row(s)).mean;
    for (std::size_t g = 0; g < ng; ++g) {
      const std::size_t upsilon = cfg.csi_grid[g];
      SweepRow row;
      row.snr_db = cfg.snr_db_grid[s];
      row.csi_rows = upsilon;
      row.capacity = summarize(partial.row(s * ng + g));
      row.mean_efficient = efficient_capacity(row.capacity.mean, upsilon, cfg.l, eff);
      row.full_csi_mean = full_mean;
      row.r1 = row.capacity.mean / full_mean;
      row.r2 = static_cast<double>(upsilon) / static_cast<double>(cfg.nr);
      row.asym_mean = asymptotic_bound(upsilon, cfg.nt, cfg.l, rho).mean;
      if (cfg.l <= cfg.nt) row.approx_capacity = approx_ergodic_capacity(upsilon, cfg.nt, cfg.l, rho);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<AdaptiveRow> run_adaptive(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::size_t ns = cfg.snr_db_grid.size();
  std::vector<double> targets(ns);
  for (std::size_t s = 0; s < ns; ++s) {
    targets[s] = resolve_target(cfg.target, cfg.nr, cfg.nt, cfg.l, db_to_linear(cfg.snr_db_grid[s]));
  }
  Grid csi(ns, cfg.trials), cap(ns, cfg.trials), visited(ns, cfg.trials), reached(ns, cfg.trials);
  Grid full_cap(ns, cfg.trials), full_visited(ns, cfg.trials), eff(ns, cfg.trials);
  const EfficiencyParams efficiency(cfg.eta);

  for_each_trial(cfg.trials, cfg.threads, [&](std::size_t t) {
    const ChannelMatrix h = trial_channel(cfg, t);
    for (std::size_t s = 0; s < ns; ++s) {
      const double rho = db_to_linear(cfg.snr_db_grid[s]);
      AdaptiveConfig acfg{targets[s], cfg.effective_batch_size(), cfg.selector, cfg.l, rho};
      RngStream order_rng = stream(cfg, StreamPurpose::kRowOrder, t);
      RowOracle oracle(h, order_rng);
      const AdaptiveOutcome out = adaptive_select(oracle, acfg);
      csi.at(s, t) = static_cast<double>(out.csi_rows_used);
      cap.at(s, t) = out.capacity_bits;
      visited.at(s, t) = static_cast<double>(out.visited_nodes);
      reached.at(s, t) = out.reached ? 1.0 : 0.0;
      eff.at(s, t) = efficient_capacity(out.capacity_bits, out.csi_rows_used, cfg.l, efficiency);
      const SelectionResult r = select(cfg.selector, h, cfg.l, rho);
      full_cap.at(s, t) = r.capacity_bits;
      full_visited.at(s, t) = static_cast<double>(r.visited_nodes);
    }
  });

  std::vector<AdaptiveRow> rows;
  for (std::size_t s = 0; s < ns; ++s) {
    AdaptiveRow row;
    row.snr_db = cfg.snr_db_grid[s];
    row.target = targets[s];
    row.reached_rate = summarize(reached.row(s)).mean;
    row.csi_rows = summarize(csi.row(s));
    row.capacity = summarize(cap.row(s));
    row.visited_nodes = summarize(visited.row(s));
    row.efficient = summarize(eff.row(s));
    row.full_capacity = summarize(full_cap.row(s));
    row.full_visited_nodes = summarize(full_visited.row(s));
    row.full_efficient = efficient_capacity(row.full_capacity.mean, cfg.nr, cfg.l, efficiency);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<BoundVsNrRow> run_bound_vs_nr(const ExperimentConfig& cfg,
                                          const std::vector<std::size_t>& nr_grid) {
  if (nr_grid.empty()) throw std::invalid_argument("run_bound_vs_nr: nr grid must not be empty");
  std::vector<BoundVsNrRow> rows;
  for (std::size_t nr : nr_grid) {
    ExperimentConfig sub = cfg;
    sub.nr = nr;
    sub.csi_grid.clear();
    sub.validate();
    const BoundKind kind = default_bound_kind(sub.nt, sub.l);
    const std::size_t ns = sub.snr_db_grid.size();
    Grid draws(ns, sub.trials);
    for_each_trial(sub.trials, sub.threads, [&](std::size_t t) {
      for (std::size_t s = 0; s < ns; ++s) {
        RngStream rng = stream(sub, StreamPurpose::kBoundSample, t);
        draws.at(s, t) = sample_bound(kind, rng, nr, sub.nt, sub.l, db_to_linear(sub.snr_db_grid[s]));
      }
    });
    for (std::size_t s = 0; s < ns; ++s) {
      BoundVsNrRow row;
      row.nr = nr;
      row.snr_db = sub.snr_db_grid[s];
      row.asym = asymptotic_bound(nr, sub.nt, sub.l, db_to_linear(sub.snr_db_grid[s]));
      row.sampled = summarize(draws.row(s));
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace ras
