#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "ras/channel.hpp"
#include "ras/rng.hpp"

namespace fixture {

/// Real-valued channel from a row list.
inline ras::ChannelMatrix real_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const auto nr = static_cast<Eigen::Index>(rows.size());
  const auto nt = static_cast<Eigen::Index>(rows.begin()->size());
  ras::ComplexMatrix m(nr, nt);
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (double v : r) m(i, j++) = {v, 0.0};
    ++i;
  }
  return ras::ChannelMatrix(m);
}

inline ras::ChannelMatrix random_channel(std::uint64_t seed, std::size_t nr, std::size_t nt) {
  ras::RngStream rng = ras::derive_stream(seed, 0);
  return ras::sample_channel(rng, nr, nt);
}

}  // namespace fixture
