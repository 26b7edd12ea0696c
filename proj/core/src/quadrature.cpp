#include "ras/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "ras/errors.hpp"

namespace ras {

namespace {

// Kronrod abscissae (descending), Kronrod weights, and the 7-point Gauss
// weights attached to the odd-indexed abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts) {
  QuadratureResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::priority_queue<Panel> heap;
  Panel first = gauss_kronrod(f, a, b);
  out.evaluations = 15;
  double total = first.value;
  double error = first.error;
  heap.push(first);

  int subdivisions = 0;
  while (error > std::max(opts.abs_tol, opts.rel_tol * std::abs(total)) &&
         subdivisions < opts.max_subdivisions) {
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = gauss_kronrod(f, worst.a, mid);
    const Panel right = gauss_kronrod(f, mid, worst.b);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
  }

  // Re-sum to shed the drift of incremental updates.
  total = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  out.value = total;
  out.error = error;
  out.converged = error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
  return out;
}

QuadratureResult integrate_tail(const std::function<double(double)>& f, double a,
                                double panel_width, const QuadratureOptions& opts,
                                double tail_fraction) {
  constexpr int kMaxPanels = 100000;
  QuadratureResult out;
  double previous = INFINITY;
  for (int k = 0; k < kMaxPanels; ++k) {
    const double lo = a + k * panel_width;
    const QuadratureResult panel = integrate(f, lo, lo + panel_width, opts);
    out.evaluations += panel.evaluations;
    if (!panel.converged) {
      std::ostringstream msg;
      msg << "integrate_tail: panel [" << lo << ", " << lo + panel_width
          << "] did not converge (estimate " << panel.value << ", error " << panel.error << ")";
      throw NumericError(msg.str());
    }
    out.value += panel.value;
    out.error += panel.error;
    const double contribution = std::abs(panel.value);
    if (contribution <= tail_fraction * std::abs(out.value) && contribution <= previous) {
      out.converged = true;
      return out;
    }
    previous = contribution;
  }
  throw NumericError("integrate_tail: integrand tail did not decay");
}

}  // namespace ras
