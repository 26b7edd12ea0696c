#include "ras/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace ras {

namespace {

double log2_1p(double rho_bar, double x) { return std::log1p(rho_bar * x) / std::numbers::ln2; }

void partition_top(std::span<double> values, std::size_t l) {
  if (l == 0 || l > values.size()) throw std::invalid_argument("top-l: requires 1 <= l <= n");
  if (l < values.size()) {
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(l - 1),
                     values.end(), std::greater<>());
  }
}

}  // namespace

double top_l_sum(std::span<double> values, std::size_t l) {
  partition_top(values, l);
  double sum = 0.0;
  for (std::size_t i = 0; i < l; ++i) sum += values[i];
  return sum;
}

double sample_full_bound(RngStream& rng, std::size_t nr, std::size_t nt, double rho_bar,
                         FullBoundKind kind) {
  if (nr == 0 || nt == 0) throw std::invalid_argument("sample_full_bound: nr and nt must be >= 1");
  const bool per_transmit = kind == FullBoundKind::kPerTransmit;
  const std::size_t terms = per_transmit ? nt : nr;
  const int shape = static_cast<int>(per_transmit ? nr : nt);
  double total = 0.0;
  for (std::size_t i = 0; i < terms; ++i) total += log2_1p(rho_bar, rng.gamma_int(shape));
  return total;
}

double sample_bf_bound(RngStream& rng, std::size_t nr, std::size_t nt, std::size_t l,
                       double rho_bar) {
  if (nt == 0) throw std::invalid_argument("sample_bf_bound: nt must be >= 1");
  std::vector<double> gamma(nr);
  for (double& g : gamma) g = rng.gamma_int(static_cast<int>(nt));
  partition_top(gamma, l);
  double total = 0.0;
  for (std::size_t i = 0; i < l; ++i) total += log2_1p(rho_bar, gamma[i]);
  return total;
}

double sample_trimmed_exponential_sum(RngStream& rng, std::size_t nr, std::size_t l) {
  std::vector<double> e(nr);
  for (double& x : e) x = rng.exponential();
  return top_l_sum(e, l);
}

double sample_mrc_bound(RngStream& rng, std::size_t nr, std::size_t nt, std::size_t l,
                        double rho_bar) {
  if (nt == 0) throw std::invalid_argument("sample_mrc_bound: nt must be >= 1");
  std::vector<double> e(nr);
  double total = 0.0;
  for (std::size_t h = 0; h < nt; ++h) {
    for (double& x : e) x = rng.exponential();
    total += log2_1p(rho_bar, top_l_sum(e, l));
  }
  return total;
}

}  // namespace ras
