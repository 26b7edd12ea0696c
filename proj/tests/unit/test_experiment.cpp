#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ras/capacity.hpp"
#include "ras/errors.hpp"
#include "ras/experiment.hpp"

using namespace ras;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.master_seed = 99;
  cfg.trials = 40;
  cfg.nr = 16;
  cfg.nt = 4;
  cfg.l = 2;
  cfg.snr_db_grid = {0.0, 10.0};
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  auto cfg = small_config();
  CHECK_NOTHROW(cfg.validate());
  cfg.trials = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.l = 17;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.snr_db_grid.clear();
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.csi_grid = {1};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.eta = 1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.batch_size = 3;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.nr = 128;
  cfg.l = 16;
  cfg.selector = SelectorKind::kExhaustive;
  CHECK_THROWS_AS(cfg.validate(), CapacityBudgetError);
}

TEST_CASE("default batch sizes") {
  auto cfg = small_config();
  CHECK(cfg.effective_batch_size() == 2);
  cfg.selector = SelectorKind::kGreedy;
  CHECK(cfg.effective_batch_size() == 4);
  cfg.batch_size = 7;
  CHECK(cfg.effective_batch_size() == 7);
}

TEST_CASE("bound regime and target resolution") {
  CHECK(default_bound_kind(8, 8) == BoundKind::kBeamforming);
  CHECK(default_bound_kind(8, 9) == BoundKind::kMrc);
  const double rho = db_to_linear(10.0);
  CHECK(resolve_target(TargetSpec::fixed(12.5), 64, 8, 4, rho) == 12.5);
  CHECK(resolve_target(TargetSpec::level09(), 64, 8, 4, rho) ==
        doctest::Approx(0.9 * approx_ergodic_capacity(64, 8, 4, rho)));
  CHECK(resolve_target(TargetSpec::level09(), 64, 8, 19, rho) ==
        doctest::Approx(0.85 * mrc_bound_params(64, 8, 19, rho).mean));
}

TEST_CASE("ergodic run is deterministic and thread-independent") {
  auto cfg = small_config();
  const auto a = run_ergodic(cfg);
  cfg.threads = 3;
  const auto b = run_ergodic(cfg);
  REQUIRE(a.size() == 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].capacity.mean == b[i].capacity.mean);
    CHECK(a[i].capacity.variance == b[i].capacity.variance);
    CHECK(a[i].bound_samples.mean == b[i].bound_samples.mean);
    CHECK(a[i].mean_visited_nodes == b[i].mean_visited_nodes);
  }
  CHECK(a[1].capacity.mean > a[0].capacity.mean);
  CHECK(a[0].approx_capacity.has_value());
}

TEST_CASE("single-trial summaries") {
  auto cfg = small_config();
  cfg.trials = 1;
  const auto rows = run_ergodic(cfg);
  CHECK(rows[0].capacity.n == 1);
  CHECK(rows[0].capacity.variance == 0.0);
}

TEST_CASE("optimal selection stays under the beamforming bound") {
  ExperimentConfig cfg;
  cfg.master_seed = 5;
  cfg.trials = 300;
  cfg.nr = 64;
  cfg.nt = 8;
  cfg.l = 3;
  cfg.snr_db_grid = {5.0};
  const auto r = run_ergodic(cfg).front();
  CHECK(r.bound_kind == BoundKind::kBeamforming);
  CHECK(r.capacity.mean <= r.bound_samples.mean + 2.0 * r.bound_samples.std_error);
  CHECK(r.approx_capacity.value() == doctest::Approx(r.capacity.mean).epsilon(0.03));
}

TEST_CASE("MRC regime has no gap approximation") {
  auto cfg = small_config();
  cfg.l = 6;
  cfg.selector = SelectorKind::kGreedy;
  const auto r = run_ergodic(cfg).front();
  CHECK(r.bound_kind == BoundKind::kMrc);
  CHECK_FALSE(r.approx_capacity.has_value());
}

TEST_CASE("CDF output") {
  auto cfg = small_config();
  cfg.trials = 200;
  const auto rows = run_cdf(cfg);
  REQUIRE(rows.size() == 2);
  const auto& s = rows[0].samples;
  REQUIRE(s.ecdf_levels.size() == 200);
  CHECK(s.ecdf_levels.front() == doctest::Approx(1.0 / 200));
  CHECK(s.ecdf_levels.back() == 1.0);
  CHECK(rows[0].ks >= 0.0);
  CHECK(rows[0].ks <= 1.0);
  CHECK(rows[0].gaussian_mean == doctest::Approx(bf_bound_params(16, 4, 2, 1.0).mean));
}

TEST_CASE("CSI sweep") {
  auto cfg = small_config();
  cfg.csi_grid = {2, 8, 16};
  cfg.eta = 0.01;
  const auto rows = sweep_csi(cfg);
  REQUIRE(rows.size() == 6);
  for (const auto& r : rows) {
    CHECK(r.r2 == doctest::Approx(static_cast<double>(r.csi_rows) / 16.0));
    CHECK(r.mean_efficient ==
          doctest::Approx(r.capacity.mean * (1.0 - 0.01 * static_cast<double>(r.csi_rows) / 2.0)));
    CHECK(r.r1 <= 1.0 + 1e-12);
    if (r.csi_rows == 16) {
      CHECK(r.capacity.mean == doctest::Approx(r.full_csi_mean));
      CHECK(r.r1 == doctest::Approx(1.0));
    }
  }
  CHECK(rows[0].capacity.mean <= rows[1].capacity.mean);
  auto empty = small_config();
  CHECK_THROWS_AS(sweep_csi(empty), std::invalid_argument);
}

TEST_CASE("adaptive experiment") {
  auto cfg = small_config();
  cfg.nr = 32;
  cfg.trials = 30;
  cfg.snr_db_grid = {10.0};
  const auto r = run_adaptive(cfg).front();
  CHECK(r.target == doctest::Approx(resolve_target(cfg.target, 32, 4, 2, 10.0)));
  CHECK(r.reached_rate >= 0.0);
  CHECK(r.reached_rate <= 1.0);
  CHECK(r.csi_rows.mean <= 32.0);
  CHECK(r.capacity.mean <= r.full_capacity.mean + 1e-9);

  cfg.target = TargetSpec::fixed(1e6);
  const auto never = run_adaptive(cfg).front();
  CHECK(never.reached_rate == 0.0);
  CHECK(never.csi_rows.mean == 32.0);
  CHECK(never.capacity.mean == doctest::Approx(never.full_capacity.mean));
}

TEST_CASE("bound against antenna count") {
  auto cfg = small_config();
  cfg.trials = 100;
  cfg.snr_db_grid = {5.0};
  const auto rows = run_bound_vs_nr(cfg, {16, 64});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].nr == 16);
  CHECK(rows[1].asym.mean > rows[0].asym.mean);
  CHECK(rows[1].sampled.mean > rows[0].sampled.mean);
  CHECK_THROWS_AS(run_bound_vs_nr(cfg, {}), std::invalid_argument);
}
