#include "ras/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ras {

ChannelMatrix::ChannelMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.cols() == 0) {
    throw std::invalid_argument("ChannelMatrix: dimensions must be positive");
  }
}

ChannelMatrix sample_channel(RngStream& rng, std::size_t nr, std::size_t nt) {
  if (nr == 0 || nt == 0) {
    throw std::invalid_argument("sample_channel: nr and nt must be >= 1");
  }
  const double scale = std::numbers::sqrt2 / 2.0;
  ComplexMatrix h(static_cast<Eigen::Index>(nr), static_cast<Eigen::Index>(nt));
  // Row-major fill so a row prefix does not depend on nt-independent draws later on.
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    for (Eigen::Index j = 0; j < h.cols(); ++j) {
      const double re = rng.normal() * scale;
      const double im = rng.normal() * scale;
      h(i, j) = {re, im};
    }
  }
  return ChannelMatrix(std::move(h));
}

ChannelMatrix row_subset(const ChannelMatrix& h, std::span<const std::size_t> indices) {
  if (indices.empty()) throw std::invalid_argument("row_subset: empty index set");
  std::vector<bool> seen(h.nr(), false);
  ComplexMatrix out(static_cast<Eigen::Index>(indices.size()), h.entries().cols());
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const std::size_t idx = indices[k];
    if (idx >= h.nr()) {
      throw std::invalid_argument("row_subset: index " + std::to_string(idx) +
                                  " out of range for " + std::to_string(h.nr()) + " rows");
    }
    if (seen[idx]) {
      throw std::invalid_argument("row_subset: duplicate index " + std::to_string(idx));
    }
    seen[idx] = true;
    out.row(static_cast<Eigen::Index>(k)) = h.entries().row(static_cast<Eigen::Index>(idx));
  }
  return ChannelMatrix(std::move(out));
}

std::vector<double> row_norms_sq(const ChannelMatrix& h) {
  std::vector<double> norms(h.nr());
  for (std::size_t i = 0; i < h.nr(); ++i) {
    norms[i] = h.entries().row(static_cast<Eigen::Index>(i)).squaredNorm();
  }
  return norms;
}

}  // namespace ras
