#pragma once

#include <functional>

namespace ras {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

struct QuadratureOptions {
  double rel_tol = 1e-8;
  double abs_tol = 0.0;
  int max_subdivisions = 2000;
};

/// Globally adaptive Gauss-Kronrod (7/15) on [a, b].
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

/// Integral over [a, inf) of an integrand with an exponentially decaying tail.
///
/// Integrates consecutive panels of width `panel_width`, stopping once a panel
/// contributes less than `tail_fraction` of the running total. Throws
/// NumericError if any panel fails to converge.
QuadratureResult integrate_tail(const std::function<double(double)>& f, double a,
                                double panel_width, const QuadratureOptions& opts = {},
                                double tail_fraction = 1e-14);

}  // namespace ras
