#pragma once

#include <cstddef>

#include "ras/channel.hpp"

namespace ras {

/// Fraction of the coherence time spent training one round of L rows (t_tr / t_coh).
class EfficiencyParams {
 public:
  /// Throws std::invalid_argument unless 0 <= eta < 1.
  explicit EfficiencyParams(double eta);
  double eta() const noexcept { return eta_; }

 private:
  double eta_;
};

/// log2 det(I + rho_bar * H H^H) in bits/s/Hz.
///
/// Evaluated on whichever Gram matrix (H H^H or H^H H) is smaller, through a
/// Cholesky factorization. Throws std::invalid_argument when rho_bar <= 0.
double capacity(const ChannelMatrix& h_sub, double rho_bar);

/// c * (1 - csi_rows * eta / l). Negative results are returned as-is.
double efficient_capacity(double c, std::size_t csi_rows, std::size_t l, EfficiencyParams eff);

/// 10^(db / 10).
double db_to_linear(double db);
/// 10 log10(linear).
double linear_to_db(double linear);

}  // namespace ras
