#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ras {

/// Sample summary. variance is the unbiased estimator (0 when n == 1).
struct SummaryStats {
  double mean = 0.0;
  double variance = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
  /// Sorted samples; ecdf_levels[i] = (i + 1) / n.
  std::vector<double> ecdf_x;
  std::vector<double> ecdf_levels;
};

/// Throws std::invalid_argument on an empty sample.
SummaryStats summarize(std::span<const double> samples, bool keep_ecdf = false);

/// Standard normal CDF through std::erfc.
double normal_cdf(double x, double mean = 0.0, double variance = 1.0);

/// Two-sided Kolmogorov-Smirnov statistic between the empirical CDF of
/// `sorted_samples` (ascending) and N(mean, variance). Ties are handled as a
/// single jump. Throws std::invalid_argument on an empty sample or variance <= 0.
double ks_distance(std::span<const double> sorted_samples, double mean, double variance);

}  // namespace ras
