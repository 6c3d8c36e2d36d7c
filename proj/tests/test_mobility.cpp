#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "rrp/errors.hpp"
#include "rrp/mobility.hpp"
#include "rrp/rng.hpp"
#include "test_util.hpp"

using namespace rrp;
using rrp_test::random_model;

namespace {

// Two states, all mass starts at A, A -> B, B -> B.
MobilityModel two_state_chain(int horizon) {
  MobilityModel m;
  m.n = 2;
  m.horizon = horizon;
  m.initial = {1.0, 0.0};
  m.transitions = CsrMatrix::from_triples(2, {{0, 1, 1.0}, {1, 1, 1.0}});
  m.steps = MobilityModel::unit_steps(2, horizon);
  return m;
}

Placement states(std::vector<int> members, int n) {
  std::vector<long long> unit_costs(static_cast<std::size_t>(n), 1);
  return make_placement(std::move(members), unit_costs);
}

}  // namespace

TEST_SUITE_BEGIN("mobility");

TEST_CASE("validate_model accepts a well-formed chain") {
  CHECK(validate_model(two_state_chain(3)).empty());
}

TEST_CASE("validate_model rejects empty dimensions first") {
  MobilityModel empty;
  auto violations = validate_model(empty);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].field == "n");

  MobilityModel no_horizon = two_state_chain(1);
  no_horizon.horizon = 0;
  violations = validate_model(no_horizon);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].field == "horizon");
}

TEST_CASE("validate_model flags a non-stochastic row") {
  MobilityModel m = two_state_chain(2);
  m.transitions = CsrMatrix::from_triples(2, {{0, 1, 0.9}, {1, 1, 1.0}});
  auto violations = validate_model(m);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].field == "transitions");
  CHECK(violations[0].index_a == 0);
  CHECK(violations[0].observed == doctest::Approx(0.9));
}

TEST_CASE("validate_model flags an increasing step column") {
  MobilityModel m = two_state_chain(3);
  m.step(1, 3) = 1.5;  // also outside [0, 1]
  auto violations = validate_model(m);
  REQUIRE(violations.size() == 2);
  CHECK(violations[0].field == "steps");
  CHECK(violations[0].index_a == 1);
  CHECK(violations[0].index_b == 3);
  CHECK(violations[1].message.find("increases") != std::string::npos);
}

TEST_CASE("validate_model flags negative probabilities") {
  MobilityModel m = two_state_chain(2);
  m.initial = {1.2, -0.2};
  auto violations = validate_model(m);
  REQUIRE(violations.size() == 1);  // sums to 1, one negative entry
  CHECK(violations[0].field == "initial");
  CHECK(violations[0].index_a == 1);
}

TEST_CASE("per_step_reward on the two-state chain") {
  MobilityModel m = two_state_chain(1);
  CHECK(per_step_reward(m, states({1}, 2), 1) == doctest::Approx(1.0));
  CHECK(per_step_reward(m, states({0}, 2), 1) == doctest::Approx(0.0));
}

TEST_CASE("per_step_reward matches path enumeration") {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + rng.uniform_int(4);  // up to 5
    int horizon = 1 + rng.uniform_int(4);
    MobilityModel m = random_model(rng, n, horizon);
    std::vector<int> members;
    for (int s = 0; s < n; ++s) {
      if (rng.bernoulli(0.4)) members.push_back(s);
    }
    Placement p = states(members, n);
    for (int k = 1; k <= horizon; ++k) {
      CHECK(per_step_reward(m, p, k) ==
            doctest::Approx(rrp_test::path_enum_reward(m, p, k)).epsilon(1e-9));
    }
  }
}

TEST_CASE("per_step_reward rejects bad arguments") {
  MobilityModel m = two_state_chain(2);
  CHECK_THROWS_AS(per_step_reward(m, states({1}, 2), 0), RangeError);
  CHECK_THROWS_AS(per_step_reward(m, states({1}, 2), 3), RangeError);
  CHECK_THROWS_AS(per_step_reward(m, states({7}, 8), 1), DimensionError);
}

TEST_CASE("cumulative_reward on the two-state chain") {
  MobilityModel m = two_state_chain(2);
  CHECK(cumulative_reward(m, states({1}, 2)) == doctest::Approx(2.0));
  CHECK(cumulative_reward(m, states({}, 2)) == doctest::Approx(0.0));
}

TEST_CASE("cumulative_reward is additive over profile singletons") {
  Rng rng(7);
  MobilityModel m = random_model(rng, 6, 4);
  RewardProfile profile = reward_profile({m});
  Placement p = states({1, 4}, 6);
  CHECK(cumulative_reward(m, p) ==
        doctest::Approx(profile.values[0][1] + profile.values[0][4])
            .epsilon(1e-9));
}

TEST_CASE("reward_profile on the two-state chain") {
  RewardProfile profile = reward_profile({two_state_chain(2)});
  CHECK(profile.values[0][0] == doctest::Approx(0.0));
  CHECK(profile.values[0][1] == doctest::Approx(2.0));
}

TEST_CASE("profile rows sum to the full-placement reward") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    MobilityModel m = random_model(rng, 8, 3);
    RewardProfile profile = reward_profile({m});
    double row_sum = 0.0;
    for (double v : profile.values[0]) row_sum += v;
    std::vector<int> all;
    for (int s = 0; s < 8; ++s) all.push_back(s);
    CHECK(row_sum ==
          doctest::Approx(cumulative_reward(m, states(all, 8))).epsilon(1e-9));
  }
}

TEST_CASE("reward_profile matches per-singleton evaluation") {
  Rng rng(13);
  std::vector<MobilityModel> models = {random_model(rng, 5, 3),
                                       random_model(rng, 5, 3)};
  RewardProfile profile = reward_profile(models);
  for (int i = 0; i < 2; ++i) {
    for (int s = 0; s < 5; ++s) {
      CHECK(profile.values[i][s] ==
            doctest::Approx(cumulative_reward(models[i], states({s}, 5)))
                .epsilon(1e-9));
    }
  }
}

TEST_CASE("reward_profile rejects mismatched models") {
  Rng rng(3);
  std::vector<MobilityModel> models = {random_model(rng, 4, 3),
                                       random_model(rng, 5, 3)};
  CHECK_THROWS_AS(reward_profile(models), DimensionError);
}

TEST_CASE("pagerank absorbs into the sink with damping 1") {
  MobilityModel m = two_state_chain(1);
  PageRankResult pr = pagerank(m.transitions, 1.0, {1.0, 0.0}, 1e-12);
  CHECK(pr.scores[0] == doctest::Approx(0.0));
  CHECK(pr.scores[1] == doctest::Approx(1.0));
}

TEST_CASE("pagerank is stationary on the symmetric 2-cycle") {
  CsrMatrix t = CsrMatrix::from_triples(2, {{0, 1, 1.0}, {1, 0, 1.0}});
  PageRankResult pr = pagerank(t, 1.0, {0.5, 0.5}, 1e-12);
  CHECK(pr.scores[0] == doctest::Approx(0.5));
  CHECK(pr.scores[1] == doctest::Approx(0.5));
}

TEST_CASE("pagerank reports non-convergence on a periodic chain") {
  CsrMatrix t = CsrMatrix::from_triples(2, {{0, 1, 1.0}, {1, 0, 1.0}});
  CHECK_THROWS_AS(pagerank(t, 1.0, {1.0, 0.0}, 1e-12, 50), ConvergenceError);
}

TEST_CASE("pagerank equals the converged per-step singleton reward") {
  // aperiodic irreducible 4-state chain: strictly positive rows
  Rng rng(5);
  const int n = 4;
  std::vector<Triple> triples;
  for (int s = 0; s < n; ++s) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (int t = 0; t < n; ++t) {
      w[t] = 0.1 + rng.u01();
      sum += w[t];
    }
    for (int t = 0; t < n; ++t) triples.push_back({s, t, w[t] / sum});
  }
  MobilityModel m;
  m.n = n;
  m.transitions = CsrMatrix::from_triples(n, triples);
  m.initial = {0.4, 0.3, 0.2, 0.1};

  PageRankResult pr = pagerank(m.transitions, 1.0, m.initial, 1e-12);
  m.horizon = pr.iterations + 1;
  m.steps = MobilityModel::unit_steps(n, m.horizon);
  for (int s = 0; s < n; ++s) {
    CHECK(per_step_reward(m, states({s}, n), m.horizon) ==
          doctest::Approx(pr.scores[s]).epsilon(1e-9));
  }
}

TEST_CASE("pagerank validates its arguments") {
  CsrMatrix t = CsrMatrix::from_triples(1, {{0, 0, 1.0}});
  CHECK_THROWS_AS(pagerank(t, 0.0, {1.0}, 1e-9), ParameterError);
  CHECK_THROWS_AS(pagerank(t, 1.0, {1.0}, 0.0), ParameterError);
  CHECK_THROWS_AS(pagerank(t, 1.0, {1.0, 0.0}, 1e-9), DimensionError);
}

TEST_CASE("lattice additivity and monotonicity hold on random models") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + rng.uniform_int(19);
    MobilityModel m = random_model(rng, n, 1 + rng.uniform_int(6));

    std::vector<int> a, b;
    for (int s = 0; s < n; ++s) {
      if (rng.bernoulli(0.4)) a.push_back(s);
      if (rng.bernoulli(0.4)) b.push_back(s);
    }
    std::vector<int> both = a;
    both.insert(both.end(), b.begin(), b.end());
    std::vector<int> inter;
    for (int s : a) {
      if (std::find(b.begin(), b.end(), s) != b.end()) inter.push_back(s);
    }

    double fa = cumulative_reward(m, states(a, n));
    double fb = cumulative_reward(m, states(b, n));
    double fu = cumulative_reward(m, states(both, n));
    double fi = cumulative_reward(m, states(inter, n));
    CHECK(fa + fb == doctest::Approx(fu + fi).epsilon(1e-9));

    // A is a subset of A u B; rewards stay within [0, K]
    CHECK(fa <= fu + 1e-12);
    CHECK(fu >= 0.0);
    CHECK(fu <= m.horizon + 1e-12);
  }
}

TEST_SUITE_END();
