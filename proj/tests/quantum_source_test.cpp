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

#include "eprgame/quantum_source.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "gtest/gtest.h"

#include "eprgame/probability.hpp"
#include "eprgame/random.hpp"
#include "test_util.hpp"

using namespace eprgame;

namespace {

constexpr double kPi = std::numbers::pi;

// Oracle: explicit two-qubit state vector in the basis |00>, |01>, |10>, |11>
// and product projectors. Amplitudes are real for in-plane measurements.
using Vec4 = std::array<double, 4>;
using Vec2 = std::array<double, 2>;

Vec4 state_vector(const TwoQubitState& s) {
  if (std::holds_alternative<SingletState>(s)) {
    return {0.0, 1.0 / std::numbers::sqrt2, -1.0 / std::numbers::sqrt2, 0.0};
  }
  const double g = std::get<SchmidtState>(s).angle;
  return {std::cos(g / 2), 0.0, 0.0, std::sin(g / 2)};
}

// Eigenvector of cos(t) Z + sin(t) X with eigenvalue `outcome`.
Vec2 eigenvector(double t, int outcome) {
  if (outcome == 1) return {std::cos(t / 2), std::sin(t / 2)};
  return {-std::sin(t / 2), std::cos(t / 2)};
}

double projector_probability(const Vec4& psi, double ta, int x, double tb, int y) {
  const Vec2 u = eigenvector(ta, x);
  const Vec2 v = eigenvector(tb, y);
  const Vec4 uv = {u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]};
  double amp = 0.0;
  for (int i = 0; i < 4; ++i) amp += uv[i] * psi[i];
  return amp * amp;
}

EprDistribution oracle_distribution(const MeasurementConfig& c) {
  const Vec4 psi = state_vector(c.state);
  EprDistribution d;
  const int outcomes[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int j = 0; j < 4; ++j) {
        d.eps[4 * (2 * a + b) + j] = projector_probability(psi, c.angles[a], outcomes[j][0],
                                                           c.angles[2 + b], outcomes[j][1]);
      }
    }
  }
  return d;
}

}  // namespace

TEST(BornDistribution, MatchesProjectorOracle) {
  Rng rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const auto config = fixtures::random_config(rng);
    const auto d = born_distribution(config);
    const auto oracle = oracle_distribution(config);
    for (std::size_t i = 0; i < 16; ++i) ASSERT_NEAR(d[i], oracle[i], 1e-12) << "eps" << i + 1;
  }
}

TEST(BornDistribution, SingletCorrelationIsMinusCosine) {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto config = fixtures::singlet_with(rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi),
                                              rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi));
    const auto c = correlations(born_distribution(config));
    const auto& t = config.angles;
    EXPECT_NEAR(c.e11, -std::cos(t[0] - t[2]), 1e-14);
    EXPECT_NEAR(c.e12, -std::cos(t[0] - t[3]), 1e-14);
    EXPECT_NEAR(c.e21, -std::cos(t[1] - t[2]), 1e-14);
    EXPECT_NEAR(c.e22, -std::cos(t[1] - t[3]), 1e-14);
  }
}

TEST(BornDistribution, AlignedSingletIsPerfectlyAnticorrelated) {
  const auto c = correlations(born_distribution(fixtures::singlet_with(0.3, 0.3, 0.3, 0.3)));
  EXPECT_NEAR(c.e11, -1.0, 1e-15);
  EXPECT_NEAR(c.e12, -1.0, 1e-15);
  EXPECT_NEAR(c.e21, -1.0, 1e-15);
  EXPECT_NEAR(c.e22, -1.0, 1e-15);
  EXPECT_NEAR(c.delta, -2.0, 1e-15);
}

TEST(BornDistribution, OptimalAnglesReachTsirelson) {
  const auto d = born_distribution(fixtures::singlet_with(0, kPi / 2, kPi / 4, -kPi / 4));
  EXPECT_NEAR(correlations(d).delta, -fixtures::kTsirelson, 1e-9);
  // With theta_B2 = 3 pi / 4 the S2' outcomes flip sign relative to -pi/4,
  // so the two S2' terms cancel the S1' terms.
  const auto flipped = born_distribution(fixtures::singlet_with(0, kPi / 2, kPi / 4, 3 * kPi / 4));
  EXPECT_NEAR(correlations(flipped).delta, 0.0, 1e-12);
}

TEST(BornDistribution, ProductStateStaysLocal) {
  Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    MeasurementConfig c{SchmidtState{0.0}, {}};
    for (double& a : c.angles) a = rng.uniform(-kPi, kPi);
    const auto d = born_distribution(c);
    const auto corr = correlations(d);
    // Product state |00>: <A B> = cos(ta) cos(tb).
    EXPECT_NEAR(corr.e11, std::cos(c.angles[0]) * std::cos(c.angles[2]), 1e-14);
    EXPECT_LE(std::abs(corr.delta), 2.0 + 1e-12);
  }
}

TEST(BornDistribution, OutputsAreValidNoSignalingDistributions) {
  Rng rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto d = born_distribution(fixtures::random_config(rng));
    ASSERT_TRUE(validate(d, kInternalTolerance).is_valid);
  }
}

TEST(BornDistribution, TsirelsonBoundOnRandomConfigs) {
  Rng rng(4242);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto d = born_distribution(fixtures::random_config(rng));
    ASSERT_LE(std::abs(correlations(d).delta), fixtures::kTsirelson + 1e-9);
  }
}

TEST(BornDistribution, RejectsBadInput) {
  EXPECT_THROW(born_distribution(fixtures::singlet_with(0, std::nan(""), 0, 0)),
               std::invalid_argument);
  EXPECT_THROW(born_distribution(fixtures::singlet_with(0, 0, std::numeric_limits<double>::infinity(), 0)),
               std::invalid_argument);
  EXPECT_THROW(born_distribution(MeasurementConfig{SchmidtState{2.0}, {}}),
               std::invalid_argument);
  EXPECT_THROW(born_distribution(MeasurementConfig{SchmidtState{-0.1}, {}}),
               std::invalid_argument);
}

TEST(MaxChshConfig, ReachesBothExtremes) {
  for (int sign : {1, -1}) {
    const auto config = max_chsh_config(sign);
    EXPECT_TRUE(std::holds_alternative<SingletState>(config.state));
    const auto d = born_distribution(config);
    EXPECT_NEAR(correlations(d).delta, sign * 2.8284271247461903, 1e-9);
    EXPECT_TRUE(validate(d, kInternalTolerance).is_valid);
  }
}

TEST(MaxChshConfig, DeterministicForSeed) {
  EXPECT_EQ(max_chsh_config(1, 17), max_chsh_config(1, 17));
  EXPECT_THROW(max_chsh_config(0), std::invalid_argument);
}

TEST(LocalMixture, PointMasses) {
  LocalModel m;
  m.weights[0] = 1.0;  // (+1,+1,+1,+1)
  EXPECT_EQ(local_deterministic_mixture(m), fixtures::all_plus_one());
  EXPECT_EQ(correlations(local_deterministic_mixture(m)).delta, 2.0);

  LocalModel flip;
  flip.weights[1] = 1.0;  // (+1,+1,+1,-1)
  const auto c = correlations(local_deterministic_mixture(flip));
  EXPECT_EQ(c.e11, 1.0);
  EXPECT_EQ(c.e12, -1.0);
  EXPECT_EQ(c.e21, 1.0);
  EXPECT_EQ(c.e22, -1.0);
  EXPECT_EQ(c.delta, 2.0);
}

TEST(LocalMixture, UniformWeightsGiveUniformDistribution) {
  LocalModel m;
  m.weights.fill(1.0 / 16);
  EXPECT_EQ(local_deterministic_mixture(m), EprDistribution::uniform());
}

TEST(LocalMixture, RejectsBadWeights) {
  LocalModel m;
  m.weights.fill(1.0 / 16);
  m.weights[3] = -0.01;
  EXPECT_THROW(local_deterministic_mixture(m), std::invalid_argument);
  LocalModel half;
  half.weights[0] = 0.5;
  EXPECT_THROW(local_deterministic_mixture(half), std::invalid_argument);
}

TEST(LocalMixture, ChshBoundAndLocalityOnRandomModels) {
  Rng rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto d = local_deterministic_mixture(fixtures::random_local_model(rng));
    ASSERT_LE(std::abs(correlations(d).delta), 2.0 + 1e-12);
    const auto report = validate(d, kInternalTolerance);
    ASSERT_TRUE(report.is_valid);
    EXPECT_EQ(report.is_local_polytope_member, true);
  }
}

TEST(LocalMixture, LinearInWeights) {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m1 = fixtures::random_local_model(rng);
    const auto m2 = fixtures::random_local_model(rng);
    const double lambda = rng.uniform();
    LocalModel mixed;
    for (std::size_t t = 0; t < 16; ++t) {
      mixed.weights[t] = lambda * m1.weights[t] + (1 - lambda) * m2.weights[t];
    }
    const auto d1 = local_deterministic_mixture(m1);
    const auto d2 = local_deterministic_mixture(m2);
    const auto dm = local_deterministic_mixture(mixed);
    for (std::size_t i = 0; i < 16; ++i) {
      ASSERT_NEAR(dm[i], lambda * d1[i] + (1 - lambda) * d2[i], 1e-12);
    }
  }
}
