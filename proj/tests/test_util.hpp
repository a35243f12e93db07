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

// Fixtures shared by the test binaries. The two family games are transcribed
// by hand from their published payoff matrices, independently of generate().

#ifndef EPRGAME_TESTS_TEST_UTIL_HPP_
#define EPRGAME_TESTS_TEST_UTIL_HPP_

#include <array>
#include <cmath>
#include <numbers>

#include "eprgame/eprgame.hpp"

namespace eprgame::fixtures {

inline GameMatrix game_case_a() {
  GameMatrix g;
  g.a = {1, 1, -3, 1, 1, -3, 1, 1, -3, 1, 1, 1, 5, 1, 1, 1};
  g.b.fill(1.0);
  return g;
}

inline GameMatrix game_case_b() {
  GameMatrix g;
  g.a = {1, -3, 9, 1, 1, 9, -3, 1, 13, 5, 5, 1, -7, 1, 1, 5};
  g.b.fill(1.0);
  return g;
}

inline GameMatrix prisoners_dilemma() { return reduce_symmetric(3, 0, 5, 1); }

// Every observable always reads +1.
inline EprDistribution all_plus_one() {
  EprDistribution d;
  d.eps[0] = d.eps[4] = d.eps[8] = d.eps[12] = 1.0;
  return d;
}

// Perfect correlation in three blocks, perfect anticorrelation in (S2, S2').
inline EprDistribution pr_box() {
  EprDistribution d;
  d.eps = {0.5, 0, 0, 0.5, 0.5, 0, 0, 0.5, 0.5, 0, 0, 0.5, 0, 0.5, 0.5, 0};
  return d;
}

inline constexpr double kTsirelson = 2.0 * std::numbers::sqrt2;

inline MeasurementConfig singlet_with(double a1, double a2, double b1, double b2) {
  return MeasurementConfig{SingletState{}, {a1, a2, b1, b2}};
}

// Delta(phi) = -2 sqrt(2) sin(phi + pi/4) as phi runs over [0, 2 pi], so a
// full turn covers [-2 sqrt(2), 2 sqrt(2)].
inline MeasurementConfig singlet_rotating_bob(double phi) {
  return singlet_with(0.0, std::numbers::pi / 2, phi, phi - std::numbers::pi / 2);
}

inline MeasurementConfig random_config(Rng& rng) {
  MeasurementConfig c;
  if (rng.bernoulli(0.5)) {
    c.state = SingletState{};
  } else {
    c.state = SchmidtState{rng.uniform(0.0, std::numbers::pi / 2)};
  }
  for (double& a : c.angles) a = rng.uniform(-2 * std::numbers::pi, 2 * std::numbers::pi);
  return c;
}

inline LocalModel random_local_model(Rng& rng) {
  LocalModel m;
  double total = 0.0;
  // Sparse and dense mixtures both show up.
  const double keep = rng.uniform(0.1, 1.0);
  for (double& w : m.weights) {
    w = rng.bernoulli(keep) ? -std::log(1.0 - rng.uniform()) : 0.0;
    total += w;
  }
  if (total == 0.0) {
    m.weights[rng.next() % 16] = 1.0;
    return m;
  }
  for (double& w : m.weights) w /= total;
  return m;
}

inline GameMatrix random_game(Rng& rng, double scale = 5.0) {
  GameMatrix g;
  for (double& v : g.a) v = rng.uniform(-scale, scale);
  for (double& v : g.b) v = rng.uniform(-scale, scale);
  return g;
}

inline FamilyParams random_family_params(Rng& rng, FamilyCase c, double scale = 5.0) {
  FamilyParams p;
  for (double& v : p.free_a) v = rng.uniform(-scale, scale);
  p.b_top = rng.uniform(-scale, scale);
  p.b_bottom = rng.uniform(-scale, scale);
  for (double& v : p.b_rest) v = rng.uniform(-scale, scale);
  p.family_case = c;
  return p;
}

}  // namespace eprgame::fixtures

#endif  // EPRGAME_TESTS_TEST_UTIL_HPP_
