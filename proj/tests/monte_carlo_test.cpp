// Copyright 2026 The eprgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eprgame/monte_carlo.hpp"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"

#include "eprgame/quantum_source.hpp"
#include "test_util.hpp"

using namespace eprgame;

TEST(Simulate, SingleDeterministicRun) {
  for (std::uint64_t seed : {0u, 1u, 12345u}) {
    const auto s = simulate(fixtures::game_case_a(), fixtures::all_plus_one(), {1, 1}, 1, seed);
    EXPECT_EQ(s.payoff_mean, (PayoffPair{1, 1}));
    EXPECT_EQ(s.counts[0], 1u);
    EXPECT_EQ(s.payoff_stderr, (PayoffPair{0, 0}));
  }
}

TEST(Simulate, UniformDistributionPayoffNearZero) {
  const auto game = fixtures::game_case_a();
  const auto dist = EprDistribution::uniform();
  const auto s = simulate(game, dist, {1.0, 0.5}, 1'000'000, 2026);
  const double analytic = mixed_payoff(game, dist, {1.0, 0.5}).alice;
  EXPECT_EQ(analytic, 0.0);
  EXPECT_LE(std::abs(s.payoff_mean.alice - analytic), 3 * s.payoff_stderr.alice);
  EXPECT_GT(s.payoff_stderr.alice, 0.0);
}

TEST(Simulate, MaximalViolationMatchesAnalyticPayoff) {
  const auto game = fixtures::game_case_a();
  const auto dist = born_distribution(max_chsh_config(1));
  const auto s = simulate(game, dist, {1.0, 0.5}, 1'000'000, 7);
  const double analytic = mixed_payoff(game, dist, {1.0, 0.5}).alice;
  EXPECT_LE(std::abs(s.payoff_mean.alice - analytic), 3 * s.payoff_stderr.alice);
}

TEST(Simulate, UnvisitedBlocksAreAbsent) {
  const auto s = simulate(fixtures::game_case_a(), EprDistribution::uniform(), {1.0, 0.5}, 1000, 3);
  EXPECT_TRUE(s.empirical_blocks[0].has_value());
  EXPECT_TRUE(s.empirical_blocks[1].has_value());
  EXPECT_FALSE(s.empirical_blocks[2].has_value());
  EXPECT_FALSE(s.empirical_blocks[3].has_value());
  EXPECT_EQ(s.block_visits[2] + s.block_visits[3], 0u);
  EXPECT_FALSE(empirical_correlations(s).has_value());
  std::uint64_t total = 0;
  for (auto c : s.counts) total += c;
  EXPECT_EQ(total, 1000u);
  for (std::size_t k = 0; k < 2; ++k) {
    double sum = 0;
    for (double v : *s.empirical_blocks[k]) sum += v;
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(Simulate, SameSeedSameSummary) {
  const auto dist = born_distribution(fixtures::singlet_with(0.1, 1.2, 0.7, -0.4));
  const auto a = simulate(fixtures::game_case_b(), dist, {0.3, 0.6}, 20000, 99);
  const auto b = simulate(fixtures::game_case_b(), dist, {0.3, 0.6}, 20000, 99);
  EXPECT_EQ(a, b);
  const auto c = simulate(fixtures::game_case_b(), dist, {0.3, 0.6}, 20000, 100);
  EXPECT_NE(a.counts, c.counts);
}

TEST(Simulate, RunRecordsMatchSummary) {
  std::vector<RunRecord> runs;
  const auto dist = born_distribution(max_chsh_config(-1));
  const auto game = fixtures::game_case_b();
  const auto s = simulate(game, dist, {0.5, 0.5}, 5000, 5,
                          [&runs](const RunRecord& r) { runs.push_back(r); });
  ASSERT_EQ(runs.size(), 5000u);
  std::array<std::uint64_t, 16> counts{};
  double sum_a = 0.0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& r = runs[i];
    EXPECT_EQ(r.run, i);
    const std::size_t j = (r.x == 1 ? 0 : 2) + (r.y == 1 ? 0 : 1);
    const std::size_t cell = 4 * (2 * r.alice_dir + r.bob_dir) + j;
    ++counts[cell];
    EXPECT_EQ(r.payoff.alice, game.a[cell]);
    EXPECT_EQ(r.payoff.bob, game.b[cell]);
    sum_a += r.payoff.alice;
  }
  EXPECT_EQ(counts, s.counts);
  EXPECT_NEAR(sum_a / 5000, s.payoff_mean.alice, 1e-12);
}

TEST(Simulate, EmpiricalFrequenciesConverge) {
  const auto dist = born_distribution(fixtures::singlet_with(0.0, 1.0, 2.0, 3.0));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto s = simulate(fixtures::game_case_a(), dist, {0.5, 0.5}, 1'000'000, seed);
    for (std::size_t k = 0; k < 4; ++k) {
      ASSERT_TRUE(s.empirical_blocks[k].has_value());
      const double bound = 5.0 / std::sqrt(static_cast<double>(s.block_visits[k]));
      for (std::size_t j = 0; j < 4; ++j) {
        ASSERT_LT(std::abs((*s.empirical_blocks[k])[j] - dist[4 * k + j]), bound);
      }
    }
  }
}

TEST(Simulate, EmpiricalDeltaConverges) {
  const auto dist = born_distribution(max_chsh_config(1));
  const auto s = simulate(fixtures::game_case_a(), dist, {0.5, 0.5}, 1'000'000, 11);
  const auto c = empirical_correlations(s);
  ASSERT_TRUE(c.has_value());
  EXPECT_NEAR(c->delta, correlations(dist).delta, 0.02);
}

TEST(Simulate, RejectsBadInput) {
  const auto game = fixtures::game_case_a();
  EXPECT_THROW(simulate(game, EprDistribution::uniform(), {1, 0.5}, 0, 1), std::invalid_argument);
  EprDistribution broken = EprDistribution::uniform();
  broken.eps[0] = 0.5;
  EXPECT_THROW(simulate(game, broken, {1, 0.5}, 10, 1), std::invalid_argument);
  EXPECT_THROW(simulate(game, EprDistribution::uniform(), {2, 0.5}, 10, 1),
               std::invalid_argument);
}
