#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "aoi/channel.hpp"
#include "aoi/rng.hpp"
#include "aoi/topology.hpp"
#include "doctest.h"

using aoi::AoiVector;
using aoi::Objective;
using aoi::Policy;
using aoi::Topology;

namespace {
Policy make_policy(std::vector<double> probs) { return Policy{std::move(probs), ""}; }
}  // namespace

TEST_CASE("policy validation") {
  const Topology t({1.0, 1.0});
  CHECK_NOTHROW(aoi::validate_policy(make_policy({0.0, 1.0}), t));
  CHECK_THROWS_AS(aoi::validate_policy(make_policy({0.5}), t), std::invalid_argument);
  CHECK_THROWS_AS(aoi::validate_policy(make_policy({0.5, -0.1}), t),
                  std::invalid_argument);
  CHECK_THROWS_AS(aoi::validate_policy(make_policy({0.5, 1.1}), t),
                  std::invalid_argument);
}

TEST_CASE("success probabilities on the symmetric pair") {
  const Topology t({1.0, 1.0});
  const Policy p = make_policy({0.4, 0.6});
  // d = 1, so each competitor discounts by (1 - p_j/2)
  CHECK(aoi::success_probability(t, p, 0) == doctest::Approx(0.28).epsilon(1e-12));
  CHECK(aoi::success_probability(t, p, 1) == doctest::Approx(0.48).epsilon(1e-12));

  const auto all = aoi::success_probabilities(t, p);
  REQUIRE(all.size() == 2);
  CHECK(all[0] == doctest::Approx(0.28).epsilon(1e-12));
  CHECK(all[1] == doctest::Approx(0.48).epsilon(1e-12));
}

TEST_CASE("ten symmetric nodes at p = 0.2") {
  const Topology t = aoi::symmetric_topology(10, 1.0);
  const Policy p = make_policy(std::vector<double>(10, 0.2));
  const auto tau = aoi::success_probabilities(t, p);
  for (double x : tau) {
    CHECK(x == doctest::Approx(0.07748409780000003).epsilon(1e-12));
  }
}

TEST_CASE("heterogeneous pair with everyone transmitting") {
  const Topology t({0.5, 1.0});
  const auto tau = aoi::success_probabilities(t, make_policy({1.0, 1.0}));
  // d_01 = 4 shields the near node; d_10 = 1/4 exposes the far one
  CHECK(tau[0] == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(tau[1] == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("sole transmitter always succeeds, silent node never does") {
  const Topology t({1.0, 1.0});
  const auto tau = aoi::success_probabilities(t, make_policy({1.0, 0.0}));
  CHECK(tau[0] == 1.0);
  CHECK(tau[1] == 0.0);

  const AoiVector h = aoi::expected_aoi(t, make_policy({1.0, 0.0}));
  CHECK(h.values[0] == 1.0);
  CHECK(std::isinf(h.values[1]));
}

TEST_CASE("expected aoi is the reciprocal of throughput") {
  const Topology t({1.0, 1.0});
  const AoiVector h = aoi::expected_aoi(t, make_policy({1.0, 1.0}));
  CHECK(h.values[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(h.values[1] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("log-space accumulation stays consistent with plain products") {
  // 80 nodes forces the log-space path; compare with a direct product
  const std::size_t n = 80;
  const Topology t = aoi::sample_uniform_disk(n, 21);
  std::vector<double> probs(n);
  aoi::SplitRng rng(3, 0);
  for (double& p : probs) p = 0.01 + 0.2 * rng.next_unit();
  const Policy pol = make_policy(probs);

  const auto tau = aoi::success_probabilities(t, pol);
  for (std::size_t i = 0; i < n; ++i) {
    double direct = probs[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) direct *= 1.0 - probs[j] / (1.0 + t.interference_ratio(i, j));
    }
    CHECK(tau[i] == doctest::Approx(direct).epsilon(1e-10));
    CHECK(tau[i] == doctest::Approx(aoi::success_probability(t, pol, i)).epsilon(1e-12));
  }
}

TEST_CASE("more interference can only hurt") {
  const Topology t = aoi::sample_uniform_disk(5, 13);
  std::vector<double> probs = {0.3, 0.2, 0.5, 0.4, 0.1};
  const double base = aoi::success_probability(t, make_policy(probs), 0);

  auto bumped = probs;
  bumped[2] = 0.9;
  CHECK(aoi::success_probability(t, make_policy(bumped), 0) < base);

  auto eager = probs;
  eager[0] = 0.6;
  CHECK(aoi::success_probability(t, make_policy(eager), 0) > base);
}

TEST_CASE("at theta >= 1 the expected captures per slot stay below one") {
  aoi::SplitRng rng(99, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const Topology t = aoi::sample_uniform_disk(8, 1000 + trial);
    std::vector<double> probs(8);
    for (double& p : probs) p = rng.next_unit();
    const auto tau = aoi::success_probabilities(t, make_policy(probs));
    double sum = 0.0;
    for (double x : tau) sum += x;
    CHECK(sum <= 1.0 + 1e-12);
  }
}

TEST_CASE("objective factories validate weights") {
  CHECK_THROWS_AS(Objective::weighted_sum({1.0, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(Objective::weighted_sum({1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(Objective::weighted_sum({}), std::invalid_argument);
}

TEST_CASE("objective values on frozen aoi vectors") {
  const AoiVector h22{{2.0, 2.0}};
  CHECK(aoi::objective_value(Objective::weighted_sum({1.0, 1.0}), h22) ==
        doctest::Approx(4.0).epsilon(1e-12));
  CHECK(aoi::objective_value(Objective::min_max(), h22) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(aoi::objective_value(Objective::proportional_fair(), h22) ==
        doctest::Approx(1.3862943611198906).epsilon(1e-12));

  const AoiVector h15{{1.0, 5.0}};
  CHECK(aoi::objective_value(Objective::min_max(), h15) == 5.0);
  CHECK(aoi::objective_value(Objective::weighted_sum({2.0, 1.0}), h15) ==
        doctest::Approx(7.0).epsilon(1e-12));
}

TEST_CASE("infinite age propagates into every objective") {
  const AoiVector h{{2.0, std::numeric_limits<double>::infinity()}};
  CHECK(std::isinf(aoi::objective_value(Objective::weighted_sum({1.0, 1.0}), h)));
  CHECK(std::isinf(aoi::objective_value(Objective::min_max(), h)));
  CHECK(std::isinf(aoi::objective_value(Objective::proportional_fair(), h)));
}

TEST_CASE("objective value validates dimensions") {
  const AoiVector h{{2.0, 2.0}};
  CHECK_THROWS_AS(aoi::objective_value(Objective::weighted_sum({1.0}), h),
                  std::invalid_argument);
}
