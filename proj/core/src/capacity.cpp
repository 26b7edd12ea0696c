#include "ras/capacity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ras {

EfficiencyParams::EfficiencyParams(double eta) : eta_(eta) {
  if (!(eta >= 0.0 && eta < 1.0)) {
    throw std::invalid_argument("EfficiencyParams: eta must lie in [0, 1)");
  }
}

double capacity(const ChannelMatrix& h_sub, double rho_bar) {
  if (!(rho_bar > 0.0)) throw std::invalid_argument("capacity: rho_bar must be positive");
  const ComplexMatrix& h = h_sub.entries();
  const bool rows_smaller = h.rows() <= h.cols();
  const Eigen::Index n = rows_smaller ? h.rows() : h.cols();
  ComplexMatrix m = ComplexMatrix::Identity(n, n);
  if (rows_smaller) {
    m.noalias() += rho_bar * (h * h.adjoint());
  } else {
    m.noalias() += rho_bar * (h.adjoint() * h);
  }
  Eigen::LLT<ComplexMatrix> llt(m);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("capacity: I + rho*Gram is not positive definite");
  }
  double log_det = 0.0;
  const auto& lower = llt.matrixLLT();
  for (Eigen::Index i = 0; i < n; ++i) log_det += std::log(lower(i, i).real());
  return 2.0 * log_det / std::numbers::ln2;
}

double efficient_capacity(double c, std::size_t csi_rows, std::size_t l, EfficiencyParams eff) {
  if (l == 0) throw std::invalid_argument("efficient_capacity: l must be >= 1");
  return c * (1.0 - static_cast<double>(csi_rows) * eff.eta() / static_cast<double>(l));
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

}  // namespace ras
