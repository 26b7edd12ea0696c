#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ras/bounds.hpp"
#include "ras/selection.hpp"
#include "ras/stats.hpp"

namespace ras {

/// How the adaptive loop derives its target capacity.
struct TargetSpec {
  enum class Mode { kLevel, kValue };
  Mode mode = Mode::kLevel;
  /// Target in bits for kValue.
  double value = 0.0;

  /// 0.9 x approx_ergodic_capacity when l <= nt, 0.85 x MRC bound mean otherwise.
  static TargetSpec level09() { return {}; }
  static TargetSpec fixed(double bits) { return {Mode::kValue, bits}; }
};

/// Declarative Monte-Carlo experiment.
struct ExperimentConfig {
  std::uint64_t master_seed = 1;
  std::size_t trials = 1000;
  std::size_t nr = 64;
  std::size_t nt = 8;
  std::size_t l = 4;
  std::vector<double> snr_db_grid{5.0};
  double eta = 0.0;
  SelectorKind selector = SelectorKind::kBranchAndBound;
  std::vector<std::size_t> csi_grid;
  /// Rows acquired per adaptive step; 0 selects the default (l for optimal
  /// inner selectors, 4 for greedy).
  std::size_t batch_size = 0;
  TargetSpec target = TargetSpec::level09();
  /// Worker threads for trial execution; 0 uses hardware concurrency.
  unsigned threads = 1;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
  std::size_t effective_batch_size() const;
};

/// Which bound applies in the (l, nt) regime: beamforming for l <= nt, MRC otherwise.
BoundKind default_bound_kind(std::size_t nt, std::size_t l);
/// Asymptotic Gaussian bound for the regime.
GaussianBound asymptotic_bound(std::size_t nr, std::size_t nt, std::size_t l, double rho_bar);
/// Target capacity implied by `spec`.
double resolve_target(const TargetSpec& spec, std::size_t nr, std::size_t nt, std::size_t l,
                      double rho_bar);

struct ErgodicRow {
  double snr_db = 0.0;
  BoundKind bound_kind = BoundKind::kBeamforming;
  SummaryStats capacity;
  SummaryStats bound_samples;
  double mean_visited_nodes = 0.0;
  double asym_mean = 0.0;
  double asym_variance = 0.0;
  /// Present only when l <= nt.
  std::optional<double> approx_capacity;
};

/// Per-SNR selector capacity and bound statistics over independent channel draws.
std::vector<ErgodicRow> run_ergodic(const ExperimentConfig& cfg);

struct CdfResult {
  double snr_db = 0.0;
  BoundKind bound_kind = BoundKind::kBeamforming;
  SummaryStats samples;  // with ECDF
  double gaussian_mean = 0.0;
  double gaussian_variance = 0.0;
  double ks = 0.0;
};

/// Empirical distribution of the sampled bound against its Gaussian approximation.
std::vector<CdfResult> run_cdf(const ExperimentConfig& cfg);

struct SweepRow {
  double snr_db = 0.0;
  std::size_t csi_rows = 0;
  SummaryStats capacity;
  double mean_efficient = 0.0;
  /// Mean capacity with partial CSI over mean capacity with full CSI.
  double r1 = 0.0;
  /// csi_rows / nr.
  double r2 = 0.0;
  double full_csi_mean = 0.0;
  /// Asymptotic bound mean and (l <= nt) gap-corrected approximation with nr = csi_rows.
  double asym_mean = 0.0;
  std::optional<double> approx_capacity;
};

/// Capacity when selection only sees a random prefix of csi_rows rows.
std::vector<SweepRow> sweep_csi(const ExperimentConfig& cfg);

struct AdaptiveRow {
  double snr_db = 0.0;
  double target = 0.0;
  double reached_rate = 0.0;
  SummaryStats csi_rows;
  SummaryStats capacity;
  SummaryStats visited_nodes;
  SummaryStats efficient;
  SummaryStats full_capacity;
  SummaryStats full_visited_nodes;
  double full_efficient = 0.0;
};

/// Adaptive partial-CSI selection against the same selector on full CSI.
std::vector<AdaptiveRow> run_adaptive(const ExperimentConfig& cfg);

struct BoundVsNrRow {
  std::size_t nr = 0;
  double snr_db = 0.0;
  GaussianBound asym;
  SummaryStats sampled;
};

/// Asymptotic bound mean/variance against sampled bound moments for each nr in
/// `nr_grid` (cfg.nr is ignored).
std::vector<BoundVsNrRow> run_bound_vs_nr(const ExperimentConfig& cfg,
                                          const std::vector<std::size_t>& nr_grid);

}  // namespace ras
