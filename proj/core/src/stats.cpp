#include "ras/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ras {

SummaryStats summarize(std::span<const double> samples, bool keep_ecdf) {
  if (samples.empty()) throw std::invalid_argument("summarize: empty sample");
  SummaryStats s;
  s.n = samples.size();
  const double n = static_cast<double>(s.n);
  double sum = 0.0;
  for (double x : samples) sum += x;
  s.mean = sum / n;
  if (s.n > 1) {
    double ss = 0.0;
    for (double x : samples) ss += (x - s.mean) * (x - s.mean);
    s.variance = ss / (n - 1.0);
  }
  s.std_error = std::sqrt(s.variance / n);
  if (keep_ecdf) {
    s.ecdf_x.assign(samples.begin(), samples.end());
    std::sort(s.ecdf_x.begin(), s.ecdf_x.end());
    s.ecdf_levels.resize(s.n);
    for (std::size_t i = 0; i < s.n; ++i) s.ecdf_levels[i] = static_cast<double>(i + 1) / n;
  }
  return s;
}

double normal_cdf(double x, double mean, double variance) {
  return 0.5 * std::erfc(-(x - mean) / std::sqrt(2.0 * variance));
}

double ks_distance(std::span<const double> sorted_samples, double mean, double variance) {
  if (sorted_samples.empty()) throw std::invalid_argument("ks_distance: empty sample");
  if (!(variance > 0.0)) throw std::invalid_argument("ks_distance: variance must be positive");
  if (!std::is_sorted(sorted_samples.begin(), sorted_samples.end())) {
    throw std::invalid_argument("ks_distance: samples must be sorted ascending");
  }
  const double n = static_cast<double>(sorted_samples.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < sorted_samples.size()) {
    std::size_t j = i;
    while (j + 1 < sorted_samples.size() && sorted_samples[j + 1] == sorted_samples[i]) ++j;
    const double cdf = normal_cdf(sorted_samples[i], mean, variance);
    const double below = static_cast<double>(i) / n;
    const double above = static_cast<double>(j + 1) / n;
    d = std::max({d, std::abs(above - cdf), std::abs(cdf - below)});
    i = j + 1;
  }
  return d;
}

}  // namespace ras
