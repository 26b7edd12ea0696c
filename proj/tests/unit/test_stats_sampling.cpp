#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "ras/bounds.hpp"
#include "ras/errors.hpp"
#include "ras/quadrature.hpp"
#include "ras/rng.hpp"
#include "ras/sampling.hpp"
#include "ras/stats.hpp"

using namespace ras;

TEST_CASE("summary statistics") {
  const std::vector<double> x{3.0, 1.0, 2.0, 4.0};
  const auto s = summarize(x, true);
  CHECK(s.n == 4);
  CHECK(s.mean == doctest::Approx(2.5));
  CHECK(s.variance == doctest::Approx(5.0 / 3.0));
  CHECK(s.std_error == doctest::Approx(std::sqrt(s.variance / 4.0)));
  CHECK(s.ecdf_x == std::vector<double>{1.0, 2.0, 3.0, 4.0});
  CHECK(s.ecdf_levels.front() == doctest::Approx(0.25));
  CHECK(s.ecdf_levels.back() == 1.0);
  CHECK(std::is_sorted(s.ecdf_levels.begin(), s.ecdf_levels.end()));

  const auto one = summarize(std::vector<double>{7.0});
  CHECK(one.n == 1);
  CHECK(one.variance == 0.0);
  CHECK(one.std_error == 0.0);
  CHECK(one.ecdf_x.empty());
  CHECK_THROWS_AS(summarize(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("normal cdf and KS distance") {
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5));
  CHECK(normal_cdf(3.0, 1.0, 4.0) == doctest::Approx(0.841344746068543));
  const std::vector<double> one{0.0};
  CHECK(ks_distance(one, 0.0, 1.0) == doctest::Approx(0.5));
  const std::vector<double> far{100.0, 101.0};
  CHECK(ks_distance(far, 0.0, 1.0) == doctest::Approx(1.0));
  const std::vector<double> unsorted{2.0, 1.0};
  CHECK_THROWS_AS(ks_distance(unsorted, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ks_distance(one, 0.0, 0.0), std::invalid_argument);

  RngStream rng = derive_stream(8, 8);
  std::vector<double> z(20000);
  for (double& v : z) v = rng.normal();
  std::sort(z.begin(), z.end());
  CHECK(ks_distance(z, 0.0, 1.0) < 0.015);
}

TEST_CASE("adaptive quadrature") {
  const auto r = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
  const auto peak = integrate([](double x) { return 1.0 / (1e-4 + x * x); }, -1.0, 1.0);
  CHECK(peak.value == doctest::Approx(2.0 / 1e-2 * std::atan(1.0 / 1e-2)).epsilon(1e-8));
}

TEST_CASE("tail quadrature") {
  const auto r = integrate_tail([](double x) { return std::log2(1.0 + x) * std::exp(-x); }, 0.0, 8.0);
  CHECK(r.value == doctest::Approx(0.8603473822708858).epsilon(1e-10));
  CHECK(r.value == doctest::Approx(oracle::gamma_log_moment(1, 1.0, 0.0, 1)).epsilon(1e-10));
  CHECK_THROWS_AS(integrate_tail([](double) { return 1.0; }, 0.0, 1.0), NumericError);
}

TEST_CASE("top-l sum") {
  std::vector<double> v{0.5, 3.0, 1.0, 2.0};
  CHECK(top_l_sum(v, 2) == doctest::Approx(5.0));
  CHECK(top_l_sum(v, 4) == doctest::Approx(6.5));
  CHECK_THROWS_AS(top_l_sum(v, 5), std::invalid_argument);
  CHECK_THROWS_AS(top_l_sum(v, 0), std::invalid_argument);
}

TEST_CASE("single-antenna full bound matches the exponential integral") {
  RngStream rng = derive_stream(1, 0);
  constexpr int n = 100000;
  double s = 0;
  for (int i = 0; i < n; ++i) s += sample_full_bound(rng, 1, 1, 1.0, FullBoundKind::kPerReceive);
  CHECK(s / n == doctest::Approx(0.8603473822708858).epsilon(0.01));
  CHECK(sample_full_bound(rng, 4, 4, 1e-12, FullBoundKind::kPerTransmit) < 1e-9);
}

TEST_CASE("untrimmed beamforming draw equals the per-receive full bound") {
  RngStream a = derive_stream(17, 3);
  RngStream b = derive_stream(17, 3);
  for (int i = 0; i < 20; ++i) {
    CHECK(sample_bf_bound(a, 12, 3, 12, 2.0) ==
          doctest::Approx(sample_full_bound(b, 12, 3, 2.0, FullBoundKind::kPerReceive)).epsilon(1e-12));
  }
}

TEST_CASE("beamforming bound sample mean agrees with the asymptotic mean") {
  RngStream rng = derive_stream(2, 0);
  constexpr int n = 100000;
  const double rho = std::pow(10.0, 0.8);
  double s = 0;
  for (int i = 0; i < n; ++i) s += sample_bf_bound(rng, 128, 8, 4, rho);
  CHECK(s / n == doctest::Approx(bf_bound_params(128, 8, 4, rho).mean).epsilon(0.01));
}

TEST_CASE("MRC bound draws") {
  RngStream rng = derive_stream(3, 0);
  constexpr int n = 100000;
  double s = 0;
  for (int i = 0; i < n; ++i) s += sample_trimmed_exponential_sum(rng, 128, 16);
  CHECK(s / n == doctest::Approx(49.27).epsilon(0.01));
  CHECK(s / n == doctest::Approx(oracle::top_l_exponential_moments(128, 16).first).epsilon(0.005));

  double full = 0;
  for (int i = 0; i < n; ++i) full += sample_trimmed_exponential_sum(rng, 20, 20);
  CHECK(full / n == doctest::Approx(20.0).epsilon(0.01));

  // nt = 1 and l = nr reduce to log2(1 + rho * sum of exponentials).
  RngStream a = derive_stream(4, 4);
  RngStream b = derive_stream(4, 4);
  for (int i = 0; i < 10; ++i) {
    const double x = sample_mrc_bound(a, 6, 1, 6, 1.5);
    const double t = sample_trimmed_exponential_sum(b, 6, 6);
    CHECK(x == doctest::Approx(std::log2(1.0 + 1.5 * t)).epsilon(1e-12));
  }
}
