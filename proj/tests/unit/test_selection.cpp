#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ras/capacity.hpp"
#include "ras/errors.hpp"
#include "ras/selection.hpp"

using namespace ras;

namespace {

void check_result_contract(const ChannelMatrix& h, std::size_t l, double rho,
                           const SelectionResult& r) {
  REQUIRE(r.indices.size() == l);
  CHECK(std::is_sorted(r.indices.begin(), r.indices.end()));
  CHECK(std::adjacent_find(r.indices.begin(), r.indices.end()) == r.indices.end());
  CHECK(r.indices.back() < h.nr());
  CHECK(r.capacity_bits == doctest::Approx(capacity(row_subset(h, r.indices), rho)).epsilon(1e-9));
}

}  // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binomial(8, 3) == 56);
  CHECK(binomial(128, 4) == 10668000);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("selector names round trip") {
  for (auto k : {SelectorKind::kExhaustive, SelectorKind::kGreedy, SelectorKind::kBranchAndBound,
                 SelectorKind::kNorm}) {
    CHECK(parse_selector(to_string(k)) == k);
  }
  CHECK_FALSE(parse_selector("nope").has_value());
}

TEST_CASE("exhaustive: single antenna picks the larger norm") {
  const auto h = fixture::real_rows({{1}, {2}});
  const auto r = exhaustive_select(h, 1, 1.0);
  CHECK(r.indices == RowIndices{1});
  CHECK(r.capacity_bits == doctest::Approx(std::log2(5.0)));
  CHECK(r.visited_nodes == 2);
}

TEST_CASE("exhaustive: l = nr returns the full capacity") {
  const auto h = fixture::random_channel(3, 5, 2);
  const auto r = exhaustive_select(h, 5, 2.0);
  CHECK(r.indices == RowIndices{0, 1, 2, 3, 4});
  CHECK(r.capacity_bits == doctest::Approx(capacity(h, 2.0)).epsilon(1e-12));
}

TEST_CASE("exhaustive matches brute force over every subset") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto h = fixture::random_channel(seed, 8, 2);
    const auto r = exhaustive_select(h, 3, 3.0);
    const auto ref = oracle::brute_force(h.entries(), 3, 3.0);
    CHECK(ref.subsets == 56);
    CHECK(r.capacity_bits == doctest::Approx(ref.capacity).epsilon(1e-9));
    CHECK(r.indices == ref.indices);
    check_result_contract(h, 3, 3.0, r);
  }
}

TEST_CASE("exhaustive guard raises a budget error") {
  const auto h = fixture::random_channel(1, 40, 2);
  CHECK_THROWS_AS(exhaustive_select(h, 20, 1.0, 1000), CapacityBudgetError);
  try {
    exhaustive_select(h, 3, 1.0, 100);
  } catch (const CapacityBudgetError& e) {
    CHECK(e.subsets() == binomial(40, 3));
  }
}

TEST_CASE("greedy: norm-4 row then the orthogonal row") {
  const auto h = fixture::real_rows({{1, 0}, {0, 1}, {2, 0}});
  const auto r = greedy_select(h, 2, 1.0);
  CHECK(r.indices == RowIndices{1, 2});
  CHECK(r.capacity_bits == doctest::Approx(std::log2(10.0)));
  const auto ref = oracle::brute_force(h.entries(), 2, 1.0);
  CHECK(r.capacity_bits == doctest::Approx(ref.capacity));
}

TEST_CASE("greedy with l = 1 is exact") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto h = fixture::random_channel(seed, 9, 3);
    CHECK(greedy_select(h, 1, 4.0).indices == exhaustive_select(h, 1, 4.0).indices);
  }
}

TEST_CASE("greedy reaches 90 percent of the optimum") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto h = fixture::random_channel(seed, 10, 2);
    const auto g = greedy_select(h, 2, 1.0);
    const auto ref = oracle::brute_force(h.entries(), 2, 1.0);
    CHECK(g.capacity_bits >= 0.9 * ref.capacity);
    CHECK(g.capacity_bits <= ref.capacity + 1e-9);
    check_result_contract(h, 2, 1.0, g);
  }
}

TEST_CASE("greedy follows the forward determinant search") {
  for (double rho : {0.1, 3.0, 100.0}) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto h = fixture::random_channel(seed, 12, 3);
      const auto g = greedy_select(h, 4, rho);
      const auto ref = oracle::greedy(h.entries(), 4, rho);
      CHECK(g.indices == ref.indices);
      CHECK(g.capacity_bits == doctest::Approx(ref.capacity).epsilon(1e-9));
      CHECK(g.capacity_bits <= oracle::brute_force(h.entries(), 4, rho).capacity + 1e-9);
    }
  }
}

TEST_CASE("branch and bound is exact on small instances") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RngStream rng = derive_stream(seed, 1);
    const std::size_t nr = 4 + rng.below(9);
    const std::size_t nt = 1 + rng.below(4);
    const std::size_t l = 1 + rng.below(std::min<std::size_t>(4, nr));
    const double rho = db_to_linear(-10.0 + 30.0 * rng.uniform());
    const auto h = sample_channel(rng, nr, nt);
    const auto b = bab_select(h, l, rho);
    const auto e = exhaustive_select(h, l, rho);
    const auto ref = oracle::brute_force(h.entries(), l, rho);
    CHECK(b.capacity_bits == doctest::Approx(ref.capacity).epsilon(1e-9));
    CHECK(e.capacity_bits == doctest::Approx(ref.capacity).epsilon(1e-9));
    CHECK(b.visited_nodes <= e.visited_nodes);
    CHECK(b.visited_nodes <= binomial(nr, l));
    check_result_contract(h, l, rho, b);
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("branch and bound forced completion") {
  const auto h = fixture::random_channel(12, 6, 3);
  const auto r = bab_select(h, 6, 1.0);
  CHECK(r.indices == RowIndices{0, 1, 2, 3, 4, 5});
  CHECK(r.visited_nodes == 1);
}

TEST_CASE("branch and bound with one transmit antenna follows norms") {
  const auto h = fixture::real_rows({{1}, {2}, {3}});
  CHECK(bab_select(h, 2, 1.0).indices == RowIndices{1, 2});
}

TEST_CASE("branch and bound prunes on larger instances") {
  const auto h = fixture::random_channel(5, 64, 8);
  const auto r = bab_select(h, 4, db_to_linear(10.0));
  CHECK(r.visited_nodes < binomial(64, 4) / 10);
  CHECK(r.capacity_bits >= greedy_select(h, 4, db_to_linear(10.0)).capacity_bits - 1e-12);
}

TEST_CASE("norm selection") {
  const auto h = fixture::real_rows({{1}, {2}, {std::sqrt(2.0)}});
  CHECK(norm_select(h, 2, 1.0).indices == RowIndices{1, 2});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto h1 = fixture::random_channel(seed, 9, 1);
    CHECK(norm_select(h1, 3, 2.0).indices == exhaustive_select(h1, 3, 2.0).indices);
  }
}

TEST_CASE("greedy beats norm selection on most channels") {
  int greedy_wins = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto h = fixture::random_channel(seed, 32, 4);
    if (norm_select(h, 4, 3.0).capacity_bits <= greedy_select(h, 4, 3.0).capacity_bits + 1e-12) {
      ++greedy_wins;
    }
  }
  CHECK(greedy_wins >= 475);
}

TEST_CASE("selectors are deterministic") {
  const auto h = fixture::random_channel(21, 20, 4);
  for (auto k : {SelectorKind::kExhaustive, SelectorKind::kGreedy, SelectorKind::kBranchAndBound,
                 SelectorKind::kNorm}) {
    const auto a = select(k, h, 3, 2.0);
    const auto b = select(k, h, 3, 2.0);
    CHECK(a.indices == b.indices);
    CHECK(a.capacity_bits == b.capacity_bits);
    CHECK(a.visited_nodes == b.visited_nodes);
  }
}

TEST_CASE("incremental branch and bound agrees with a fresh search") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto h = fixture::random_channel(seed, 14, 3);
    const double rho = 2.0;
    const std::size_t l = 3;
    const RowIndices first{0, 1, 2, 3, 4, 5};
    const auto prior_local = bab_select(row_subset(h, first), l, rho);
    std::vector<bool> fresh(h.nr(), true);
    for (std::size_t i : first) fresh[i] = false;
    RowIndices prior;
    for (std::size_t k : prior_local.indices) prior.push_back(first[k]);
    const auto inc = bab_select_incremental(h, l, rho, prior, fresh);
    const auto full = bab_select(h, l, rho);
    CHECK(inc.capacity_bits == doctest::Approx(full.capacity_bits).epsilon(1e-12));
    CHECK(inc.indices == full.indices);
  }
}

TEST_CASE("incremental greedy agrees with greedy on the acquired rows") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto h = fixture::random_channel(seed, 24, 4);
    const std::size_t l = 6;
    IncrementalGreedy inc(h, l, 1.5);
    RowIndices acquired;
    RowIndices pending;
    for (std::size_t start = 0; start < h.nr(); start += 4) {
      for (std::size_t i = start; i < start + 4; ++i) pending.push_back((i * 7) % h.nr());
      acquired.insert(acquired.end(), pending.end() - 4, pending.end());
      if (acquired.size() < l) continue;
      const auto r = inc.update(pending);
      pending.clear();
      RowIndices sorted = acquired;
      std::sort(sorted.begin(), sorted.end());
      const auto ref = greedy_select(row_subset(h, sorted), l, 1.5);
      RowIndices mapped;
      for (std::size_t k : ref.indices) mapped.push_back(sorted[k]);
      std::sort(mapped.begin(), mapped.end());
      CHECK(r.indices == mapped);
      CHECK(r.capacity_bits == doctest::Approx(ref.capacity_bits).epsilon(1e-10));
    }
  }
}
