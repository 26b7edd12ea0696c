#pragma once

// Independent reference computations. Nothing here calls into the library's
// numerical paths; only ChannelMatrix is shared as a container.

#include <Eigen/Dense>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

namespace oracle {

using Matrix = Eigen::MatrixXcd;

/// log2 det(I_rows + rho H H^H) by full-pivot LU on the row-side Gram.
inline double logdet_rows(const Matrix& h, double rho) {
  const Eigen::Index n = h.rows();
  const Matrix a = Matrix::Identity(n, n) + rho * h * h.adjoint();
  const std::complex<double> det = a.fullPivLu().determinant();
  return std::log2(det.real());
}

/// Same quantity through the column-side Gram.
inline double logdet_cols(const Matrix& h, double rho) {
  const Eigen::Index n = h.cols();
  const Matrix a = Matrix::Identity(n, n) + rho * h.adjoint() * h;
  return std::log2(a.fullPivLu().determinant().real());
}

inline Matrix rows_of(const Matrix& h, const std::vector<std::size_t>& idx) {
  Matrix out(static_cast<Eigen::Index>(idx.size()), h.cols());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    out.row(static_cast<Eigen::Index>(k)) = h.row(static_cast<Eigen::Index>(idx[k]));
  }
  return out;
}

struct Best {
  std::vector<std::size_t> indices;
  double capacity = -std::numeric_limits<double>::infinity();
  std::size_t subsets = 0;
};

/// Optimum over every l-subset, enumerated by bitmask (nr <= 20).
/// Ties within 1e-12 relative go to the lexicographically smaller set.
inline Best brute_force(const Matrix& h, std::size_t l, double rho) {
  const std::size_t nr = static_cast<std::size_t>(h.rows());
  Best best;
  for (std::uint32_t mask = 0; mask < (1u << nr); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != l) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < nr; ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    ++best.subsets;
    const double c = logdet_rows(rows_of(h, idx), rho);
    if (best.indices.empty()) {
      best.capacity = c;
      best.indices = idx;
      continue;
    }
    const double tol = 1e-12 * std::max(1.0, std::abs(best.capacity));
    const bool tie = std::abs(c - best.capacity) <= tol;
    if ((!tie && c > best.capacity) || (tie && idx < best.indices)) {
      best.capacity = c;
      best.indices = idx;
    }
  }
  return best;
}

/// Forward greedy by full determinant evaluation; ties go to the smaller index.
inline Best greedy(const Matrix& h, std::size_t l, double rho) {
  const std::size_t nr = static_cast<std::size_t>(h.rows());
  Best out;
  std::vector<bool> used(nr, false);
  for (std::size_t step = 0; step < l; ++step) {
    double best = -std::numeric_limits<double>::infinity();
    std::size_t pick = nr;
    for (std::size_t i = 0; i < nr; ++i) {
      if (used[i]) continue;
      auto idx = out.indices;
      idx.push_back(i);
      const double c = logdet_rows(rows_of(h, idx), rho);
      if (c > best * (1.0 + 1e-12) + 1e-15) {
        best = c;
        pick = i;
      }
    }
    used[pick] = true;
    out.indices.push_back(pick);
    out.capacity = best;
  }
  std::sort(out.indices.begin(), out.indices.end());
  return out;
}

/// Q(nt, u) = upper regularized incomplete gamma.
inline double gamma_tail(int nt, double u) { return boost::math::gamma_q(nt, u); }

/// Moments of the sum of the l largest of nr unit exponentials. By the Renyi
/// representation the sum equals sum_k min(k, l)/k * E_k, E_k i.i.d. Exp(1).
inline std::pair<double, double> top_l_exponential_moments(std::size_t nr, std::size_t l) {
  double mean = 0.0, var = 0.0;
  for (std::size_t k = 1; k <= nr; ++k) {
    const double w = static_cast<double>(std::min(k, l)) / static_cast<double>(k);
    mean += w;
    var += w * w;
  }
  return {mean, var};
}

/// E[log2(1 + rho x)^p ; x > u] for x ~ Gamma(nt, 1), by exp-sinh quadrature.
inline double gamma_log_moment(int nt, double rho, double u, int p) {
  const double lg = std::lgamma(static_cast<double>(nt));
  auto f = [&](double t) {
    const double x = u + t;
    const double g = std::log2(1.0 + rho * x);
    return std::pow(g, p) * std::exp((nt - 1) * std::log(x) - x - lg);
  };
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate(f, 1e-12);
}

/// E[log2(1 + rho t)^p] for t ~ N(mu, var) restricted to [max(0, mu - 10 s), mu + 10 s].
inline double gaussian_log_moment(double mu, double var, double rho, int p) {
  const double s = std::sqrt(var);
  auto f = [&](double t) {
    const double z = (t - mu) / s;
    return std::pow(std::log2(1.0 + rho * t), p) * std::exp(-0.5 * z * z) /
           (s * std::sqrt(2.0 * M_PI));
  };
  const double lo = std::max(0.0, mu - 10 * s), hi = mu + 10 * s;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 15, 1e-12);
}

}  // namespace oracle
