#pragma once

#include <cstddef>

namespace ras {

enum class BoundKind { kBeamforming, kMrc };

/// Parameters of a Gaussian approximating an upper capacity bound.
struct GaussianBound {
  BoundKind kind = BoundKind::kBeamforming;
  double mean = 0.0;
  double variance = 0.0;
  std::size_t nr = 0;
  std::size_t nt = 0;
  std::size_t l = 0;
  double rho_bar = 0.0;
  /// Chi-square threshold; for kMrc this is ln(nr / l).
  double threshold_u = 0.0;
};

/// Mean and variance of the top-l sum of nr unit exponentials.
struct TrimmedSumParams {
  double mu_t = 0.0;
  double sigma_t_sq = 0.0;
};

/// Density of Gamma(nt, 1): e^{-x} x^{nt-1} / (nt-1)! on x >= 0.
double chi2_pdf(int nt, double x);

/// Upper tail of Gamma(nt, 1): e^{-x} sum_{k<nt} x^k / k!.
double chi2_tail(int nt, double x);

/// u >= 0 with chi2_tail(nt, u) = l / nr, by bisection to 1e-10.
/// Throws std::invalid_argument unless 1 <= l <= nr.
double chi2_tail_threshold(int nt, std::size_t l, std::size_t nr);

/// Gaussian approximation of the sum of the l largest log2(1 + rho_bar * gamma_i)
/// with gamma_i ~ Gamma(nt, 1), i = 1..nr.
///
/// The mean and second moment are integrated by parts against the upper tail
/// of Gamma(nt, 1), leaving integrands that decay like x^{nt-1} e^{-x}. The
/// variance uses the trimmed-sum form with the cut-off taken on the
/// log2(1 + rho_bar * x) scale. Throws NumericError if quadrature fails.
GaussianBound bf_bound_params(std::size_t nr, std::size_t nt, std::size_t l, double rho_bar,
                              double rel_tol = 1e-8);

/// Closed-form mean and variance of the top-l of nr unit exponentials.
TrimmedSumParams mrc_trimmed_params(std::size_t nr, std::size_t l);

/// Mean/variance of sum_{h<nt} log2(1 + rho_bar * t_h), t_h ~ N(mu_t, sigma_t^2) i.i.d.
/// The Gaussian is integrated over [max(0, mu_t - 10 sigma_t), mu_t + 10 sigma_t].
GaussianBound mrc_bound_params(std::size_t nr, std::size_t nt, std::size_t l, double rho_bar,
                               double rel_tol = 1e-8);

/// Empirical gap between the beamforming bound mean and the ergodic capacity.
/// `rho_db` is the normalized SNR in dB.
double gap(std::size_t l, std::size_t nt, double rho_db);

/// Beamforming bound mean minus the gap model. Requires l <= nt.
double approx_ergodic_capacity(std::size_t nr, std::size_t nt, std::size_t l, double rho_bar);

}  // namespace ras
