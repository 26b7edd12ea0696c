#pragma once

#include <cstddef>
#include <span>

#include "ras/rng.hpp"

namespace ras {

enum class FullBoundKind {
  /// sum over nt transmit antennas of log2(1 + rho_bar * alpha_i), alpha_i ~ Gamma(nr, 1).
  kPerTransmit,
  /// sum over nr receive antennas of log2(1 + rho_bar * gamma_i), gamma_i ~ Gamma(nt, 1).
  kPerReceive,
};

/// One draw of an untrimmed full-complexity bound.
double sample_full_bound(RngStream& rng, std::size_t nr, std::size_t nt, double rho_bar,
                         FullBoundKind kind);

/// One draw of the beamforming bound: the l largest of nr Gamma(nt, 1) variates
/// mapped through log2(1 + rho_bar * x) and summed.
double sample_bf_bound(RngStream& rng, std::size_t nr, std::size_t nt, std::size_t l,
                       double rho_bar);

/// One draw of the MRC bound: nt independent blocks, each the top-l sum of nr
/// unit exponentials mapped through log2(1 + rho_bar * s).
double sample_mrc_bound(RngStream& rng, std::size_t nr, std::size_t nt, std::size_t l,
                        double rho_bar);

/// One draw of the top-l sum of nr unit exponentials.
double sample_trimmed_exponential_sum(RngStream& rng, std::size_t nr, std::size_t l);

/// Sum of the l largest values; reorders `values`. O(n) expected.
double top_l_sum(std::span<double> values, std::size_t l);

}  // namespace ras
