#include <doctest.h>

#include "banpar/families.hpp"
#include "banpar/fixedpoints.hpp"
#include "banpar/parallelize.hpp"
#include "helpers.hpp"

using namespace banpar;

TEST_CASE("positive and negative cycles") {
  const AffineUnaryNetwork five = positive_cycle(5);
  for (std::uint32_t i = 0; i < 5; ++i)
    CHECK(five.rules[i] == AffineUnaryRule::link(i == 0 ? 4 : i - 1, Sign::positive));

  CHECK(positive_cycle(1).rules == std::vector<AffineUnaryRule>{AffineUnaryRule::link(0, Sign::positive)});

  CHECK(interaction_graph(positive_cycle(3)).arcs ==
        std::vector<Arc>{{0, 1, ArcSign::positive}, {1, 2, ArcSign::positive}, {2, 0, ArcSign::positive}});

  const AffineUnaryNetwork neg = negative_cycle(3);
  CHECK(neg.rules[0] == AffineUnaryRule::link(2, Sign::negative));
  CHECK(brute_force_fixed_points(to_truth_tables(neg), testutil::parallel_schedule(3)).empty());
  CHECK(brute_force_fixed_points(to_truth_tables(negative_cycle(1)), testutil::parallel_schedule(1))
            .empty());

  CHECK_THROWS_AS(positive_cycle(0), std::invalid_argument);
}

TEST_CASE("hhat couples a cycle with constant automata") {
  const AffineUnaryNetwork hh = hhat(2);
  REQUIRE(hh.size() == 6);
  CHECK(hh.rules[0] == AffineUnaryRule::link(1, Sign::negative));
  CHECK(hh.rules[1] == AffineUnaryRule::link(0, Sign::positive));
  for (std::uint32_t i = 2; i < 6; ++i) CHECK(hh.rules[i] == AffineUnaryRule::constant(false));

  const PartitionedOrder mu = mu_hat(2);
  CHECK(mu.oblocks == std::vector<std::vector<std::uint32_t>>{{0}, {1}, {2, 3, 4, 5}});
  CHECK(sequentialize(mu).blocks.size() == 4);  // 2n substeps

  const auto fps = brute_force_fixed_points(to_truth_tables(hh), sequentialize(mu));
  REQUIRE(fps.size() == 4);  // 2^n
  for (const Configuration& x : fps)
    for (std::uint32_t i = 2; i < 6; ++i) CHECK(!x.bit(i));

  CHECK(count_fixed_points_unary(parallelize_unary(hh, sequentialize(mu))) ==
        FixedPointCount{2, false});
}

TEST_CASE("hhat positive variant drops the negation and n constants") {
  const AffineUnaryNetwork hp = hhat(3, HhatVariant::positive);
  REQUIRE(hp.size() == 6);
  CHECK(hp.rules[0] == AffineUnaryRule::link(2, Sign::positive));
  const PartitionedOrder mu = mu_hat(3, HhatVariant::positive);
  CHECK(sequentialize(mu).blocks.size() == 3);  // n substeps only
  CHECK(count_fixed_points_unary(parallelize_unary(hp, sequentialize(mu))) ==
        FixedPointCount{3, false});
  // two fixed points in parallel
  CHECK(brute_force_fixed_points(to_truth_tables(hp), testutil::parallel_schedule(6)).size() == 2);
}

TEST_CASE("hhat parallelizes to identity-plus-constants") {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    const AffineUnaryNetwork result = parallelize_unary(hhat(n), sequentialize(mu_hat(n)));
    for (std::uint32_t i = 0; i < n; ++i)
      CHECK(result.rules[i] == AffineUnaryRule::link(i, Sign::positive));
    for (std::uint32_t i = n; i < 3 * n; ++i)
      CHECK(result.rules[i] == AffineUnaryRule::constant(false));
  }
}

TEST_CASE("mu_odd matches the stated formula") {
  CHECK(mu_odd(2).oblocks == std::vector<std::vector<std::uint32_t>>{{0, 1}, {2, 3, 4}});
  CHECK(mu_odd(3).oblocks == std::vector<std::vector<std::uint32_t>>{{0, 1, 2}, {3, 4, 6, 5}});
  CHECK(sequentialize(mu_odd(3)).blocks.size() == 12);  // k(k+1)
  CHECK_THROWS_AS(mu_odd(1), std::invalid_argument);

  const ComponentReport report =
      cycle_census(parallelize_unary(positive_cycle(7), sequentialize(mu_odd(3))));
  CHECK(report.component_count == 3);
}

TEST_CASE("mu_even matches the stated formula") {
  CHECK(mu_even(4).oblocks ==
        std::vector<std::vector<std::uint32_t>>{{0}, {1, 2, 3}, {4, 7, 5, 6}});
  CHECK(mu_even(5).oblocks ==
        std::vector<std::vector<std::uint32_t>>{{0}, {1, 2, 3, 4}, {5, 9, 6, 8, 7}});
  CHECK(sequentialize(mu_even(4)).blocks.size() == 12);  // lcm(1, 3, 4)
  CHECK_THROWS_AS(mu_even(3), std::invalid_argument);

  const ComponentReport report =
      cycle_census(parallelize_unary(positive_cycle(8), sequentialize(mu_even(4))));
  CHECK(report.component_count == 3);
}

TEST_CASE("odd family yields k positive cycles for small k") {
  for (std::uint32_t k = 2; k <= 12; ++k) {
    const ComponentReport report =
        cycle_census(parallelize_unary(positive_cycle(2 * k + 1), sequentialize(mu_odd(k))));
    CHECK(report.component_count == k);
    for (const ComponentInfo& comp : report.components) {
      CHECK(comp.cycle_length > 0);
      CHECK(comp.cycle_sign == Sign::positive);
    }
  }
}

TEST_CASE("even family yields k-1 positive cycles for small k") {
  for (std::uint32_t k = 4; k <= 12; ++k) {
    const ComponentReport report =
        cycle_census(parallelize_unary(positive_cycle(2 * k), sequentialize(mu_even(k))));
    CHECK(report.component_count == k - 1);
    for (const ComponentInfo& comp : report.components) {
      CHECK(comp.cycle_length > 0);
      CHECK(comp.cycle_sign == Sign::positive);
    }
  }
}

TEST_CASE("family fixed-point counts cross-check by brute force") {
  // mu_odd at k=2 (n=5): 2^2 fixed points
  CHECK(brute_force_fixed_points(to_truth_tables(positive_cycle(5)), sequentialize(mu_odd(2)))
            .size() == 4);
  // mu_even at k=4 (n=8): 2^3 fixed points
  CHECK(brute_force_fixed_points(to_truth_tables(positive_cycle(8)), sequentialize(mu_even(4)))
            .size() == 8);
  // hhat for n <= 3: 2^n fixed points
  for (std::uint32_t n = 1; n <= 3; ++n)
    CHECK(brute_force_fixed_points(to_truth_tables(hhat(n)), sequentialize(mu_hat(n))).size() ==
          std::uint64_t{1} << n);
}
