#include "ras/bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ras/errors.hpp"
#include "ras/quadrature.hpp"

namespace ras {

namespace {

void check_dims(std::size_t nr, std::size_t nt, std::size_t l, const char* who) {
  if (nr == 0 || nt == 0 || l == 0) {
    throw std::invalid_argument(std::string(who) + ": nr, nt and l must be >= 1");
  }
  if (l > nr) {
    throw std::invalid_argument(std::string(who) + ": l=" + std::to_string(l) +
                                " exceeds nr=" + std::to_string(nr));
  }
}

double log2_1p(double rho_bar, double x) { return std::log1p(rho_bar * x) / std::numbers::ln2; }

double checked(const QuadratureResult& r, const char* what) {
  if (!r.converged) {
    std::ostringstream msg;
    msg << what << ": quadrature did not converge (estimate " << r.value << ", error "
        << r.error << ", " << r.evaluations << " evaluations)";
    throw NumericError(msg.str());
  }
  return r.value;
}

}  // namespace

double chi2_pdf(int nt, double x) {
  if (nt < 1) throw std::invalid_argument("chi2_pdf: nt must be >= 1");
  if (x < 0.0) return 0.0;
  if (x == 0.0) return nt == 1 ? 1.0 : 0.0;
  return std::exp(-x + (nt - 1) * std::log(x) - std::lgamma(static_cast<double>(nt)));
}

double chi2_tail(int nt, double x) {
  if (nt < 1) throw std::invalid_argument("chi2_tail: nt must be >= 1");
  if (x <= 0.0) return 1.0;
  double sum = 0.0;
  if (x < 700.0) {
    double term = std::exp(-x);
    for (int k = 0; k < nt; ++k) {
      if (k > 0) term *= x / k;
      sum += term;
    }
  } else {
    for (int k = 0; k < nt; ++k) {
      sum += std::exp(-x + k * std::log(x) - std::lgamma(k + 1.0));
    }
  }
  return sum;
}

double chi2_tail_threshold(int nt, std::size_t l, std::size_t nr) {
  if (nt < 1) throw std::invalid_argument("chi2_tail_threshold: nt must be >= 1");
  if (l == 0 || nr == 0 || l > nr) {
    throw std::invalid_argument("chi2_tail_threshold: requires 1 <= l <= nr");
  }
  if (l == nr) return 0.0;
  const double p = static_cast<double>(l) / static_cast<double>(nr);
  if (nt == 1) return std::log(static_cast<double>(nr) / static_cast<double>(l));

  double lo = 0.0;
  double hi = nt + 40.0 + 10.0 * std::sqrt(static_cast<double>(nt));
  while (chi2_tail(nt, hi) > p) hi *= 2.0;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (chi2_tail(nt, mid) > p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

GaussianBound bf_bound_params(std::size_t nr, std::size_t nt, std::size_t l, double rho_bar,
                              double rel_tol) {
  check_dims(nr, nt, l, "bf_bound_params");
  if (!(rho_bar > 0.0)) throw std::invalid_argument("bf_bound_params: rho_bar must be positive");
  const int k = static_cast<int>(nt);
  const double n = static_cast<double>(nr);
  const double ell = static_cast<double>(l);
  const double u = chi2_tail_threshold(k, l, nr);
  const double g_u = log2_1p(rho_bar, u);
  const double q_u = chi2_tail(k, u);

  // Integration by parts against the tail function Q(x): the boundary term at u
  // plus integrals of Q(x) times the derivative of g and g^2, which decay like
  // x^{nt-1} e^{-x}.
  const auto dg = [rho_bar](double x) { return rho_bar / ((1.0 + rho_bar * x) * std::numbers::ln2); };
  const QuadratureOptions opts{rel_tol, 0.0, 2000};
  const double width = std::max(4.0, static_cast<double>(nt));
  const double first = checked(
      integrate_tail([&](double x) { return chi2_tail(k, x) * dg(x); }, u, width, opts),
      "bf_bound_params mean");
  const double second = checked(
      integrate_tail([&](double x) { return chi2_tail(k, x) * 2.0 * log2_1p(rho_bar, x) * dg(x); },
                     u, width, opts),
      "bf_bound_params second moment");

  const double mean = n * (g_u * q_u + first);
  const double raw_second = n * (g_u * g_u * q_u + second);
  const double per_term_mean = mean / ell;
  const double sigma_sq = std::max(0.0, raw_second / ell - per_term_mean * per_term_mean);
  const double shift = g_u - per_term_mean;

  GaussianBound out;
  out.kind = BoundKind::kBeamforming;
  out.mean = mean;
  out.variance = ell * (sigma_sq + shift * shift * (1.0 - ell / n));
  out.nr = nr;
  out.nt = nt;
  out.l = l;
  out.rho_bar = rho_bar;
  out.threshold_u = u;
  return out;
}

TrimmedSumParams mrc_trimmed_params(std::size_t nr, std::size_t l) {
  if (l == 0 || l > nr) throw std::invalid_argument("mrc_trimmed_params: requires 1 <= l <= nr");
  const double n = static_cast<double>(nr);
  const double ell = static_cast<double>(l);
  return {ell * (1.0 + std::log(n / ell)), ell * (2.0 - ell / n)};
}

GaussianBound mrc_bound_params(std::size_t nr, std::size_t nt, std::size_t l, double rho_bar,
                               double rel_tol) {
  check_dims(nr, nt, l, "mrc_bound_params");
  if (!(rho_bar > 0.0)) throw std::invalid_argument("mrc_bound_params: rho_bar must be positive");
  const TrimmedSumParams t = mrc_trimmed_params(nr, l);
  const double sd = std::sqrt(t.sigma_t_sq);
  const double lo = std::max(0.0, t.mu_t - 10.0 * sd);
  const double hi = t.mu_t + 10.0 * sd;
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * t.sigma_t_sq);
  const auto density = [&](double x) {
    const double z = x - t.mu_t;
    return norm * std::exp(-z * z / (2.0 * t.sigma_t_sq));
  };
  const QuadratureOptions opts{rel_tol, 0.0, 2000};
  const double m1 = checked(
      integrate([&](double x) { return log2_1p(rho_bar, x) * density(x); }, lo, hi, opts),
      "mrc_bound_params mean");
  const double m2 = checked(
      integrate([&](double x) {
        const double g = log2_1p(rho_bar, x);
        return g * g * density(x);
      }, lo, hi, opts),
      "mrc_bound_params second moment");

  const double ntd = static_cast<double>(nt);
  GaussianBound out;
  out.kind = BoundKind::kMrc;
  out.mean = ntd * m1;
  out.variance = std::max(0.0, ntd * (m2 - m1 * m1));
  out.nr = nr;
  out.nt = nt;
  out.l = l;
  out.rho_bar = rho_bar;
  out.threshold_u = std::log(static_cast<double>(nr) / static_cast<double>(l));
  return out;
}

double gap(std::size_t l, std::size_t nt, double rho_db) {
  if (l == 0 || nt == 0) throw std::invalid_argument("gap: l and nt must be >= 1");
  const double ell = static_cast<double>(l);
  const double base = 0.1146 * ell * ell * (ell - 1.0) /
                      std::pow(static_cast<double>(nt), 0.4401 * std::sqrt(ell));
  if (rho_db >= 0.0) return base;
  const double a = std::exp(0.2226 * (rho_db + 8.78));
  return base * a / (a + 1.0);
}

double approx_ergodic_capacity(std::size_t nr, std::size_t nt, std::size_t l, double rho_bar) {
  if (l > nt) {
    throw std::invalid_argument("approx_ergodic_capacity: the gap model only covers l <= nt (l=" +
                                std::to_string(l) + ", nt=" + std::to_string(nt) + ")");
  }
  const GaussianBound bf = bf_bound_params(nr, nt, l, rho_bar);
  return bf.mean - gap(l, nt, 10.0 * std::log10(rho_bar));
}

}  // namespace ras
