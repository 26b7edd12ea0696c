#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ras/rng.hpp"

namespace ras {

using ComplexMatrix = Eigen::MatrixXcd;
using RowIndices = std::vector<std::size_t>;

/// Nr x Nt matrix of complex channel gains. Rows are receive antennas.
class ChannelMatrix {
 public:
  ChannelMatrix() = default;
  /// Throws std::invalid_argument on an empty matrix.
  explicit ChannelMatrix(ComplexMatrix entries);

  std::size_t nr() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  std::size_t nt() const noexcept { return static_cast<std::size_t>(entries_.cols()); }
  const ComplexMatrix& entries() const noexcept { return entries_; }
  std::complex<double> operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  bool operator==(const ChannelMatrix& other) const {
    return entries_.rows() == other.entries_.rows() &&
           entries_.cols() == other.entries_.cols() && entries_ == other.entries_;
  }

 private:
  ComplexMatrix entries_;
};

/// i.i.d. CN(0,1) entries: real and imaginary parts each N(0, 1/2).
ChannelMatrix sample_channel(RngStream& rng, std::size_t nr, std::size_t nt);

/// Rows `indices[k]` of h, in the given order. Rejects duplicates and out-of-range indices.
ChannelMatrix row_subset(const ChannelMatrix& h, std::span<const std::size_t> indices);

/// Squared Euclidean norm of each row.
std::vector<double> row_norms_sq(const ChannelMatrix& h);

}  // namespace ras
