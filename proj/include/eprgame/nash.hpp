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

#ifndef EPRGAME_NASH_HPP_
#define EPRGAME_NASH_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "eprgame/game.hpp"
#include "eprgame/probability.hpp"

namespace eprgame {

inline constexpr double kNashTolerance = 1e-9;

/// Unilateral deviation gains Pi(deviation) - Pi(pair). Payoffs are affine in
/// each player's own probability, so the pure deviations p in {0, 1} and
/// q in {0, 1} decide the verdict.
struct NashReport {
  MixedStrategyPair pair;
  double gain_A_at_p0 = 0.0;
  double gain_A_at_p1 = 0.0;
  double gain_B_at_q0 = 0.0;
  double gain_B_at_q1 = 0.0;
  bool is_ne = false;
  // NE, and some deviation to a different strategy gains zero within tol.
  bool is_strict_boundary = false;
  // Per-player split of is_strict_boundary.
  bool alice_weak = false;
  bool bob_weak = false;
};

// Brackets governing the pair (1, 1/2):
//   Pi_A(1,1/2) - Pi_A(p,1/2) = -(1-p)/2 * bracket_A
//   Pi_B(1,1/2) - Pi_B(1,q)   = (1/2 - q) * bracket_B
struct BracketValues {
  double bracket_A = 0.0;
  double bracket_B = 0.0;
};

// Brackets governing the pair (1/2, 1/2):
//   Pi_A(1/2,1/2) - Pi_A(p,1/2) = (1/2)(1/2 - p) * alice
//   Pi_B(1/2,1/2) - Pi_B(1/2,q) = (1/2)(1/2 - q) * bob
struct HalfHalfBrackets {
  double alice = 0.0;
  double bob = 0.0;
};

inline NashReport is_nash(const PayoffTable& table, const MixedStrategyPair& pair,
                          double tol = kNashTolerance) {
  check_strategy(pair);
  const PayoffPair here = mixed_payoff(table, pair);
  NashReport r;
  r.pair = pair;
  r.gain_A_at_p0 = mixed_payoff(table, {0.0, pair.q}).alice - here.alice;
  r.gain_A_at_p1 = mixed_payoff(table, {1.0, pair.q}).alice - here.alice;
  r.gain_B_at_q0 = mixed_payoff(table, {pair.p, 0.0}).bob - here.bob;
  r.gain_B_at_q1 = mixed_payoff(table, {pair.p, 1.0}).bob - here.bob;
  r.is_ne = r.gain_A_at_p0 <= tol && r.gain_A_at_p1 <= tol && r.gain_B_at_q0 <= tol &&
            r.gain_B_at_q1 <= tol;
  auto zero_gain = [&](double gain, bool is_real_deviation) {
    return is_real_deviation && std::abs(gain) <= tol;
  };
  r.alice_weak = r.is_ne && (zero_gain(r.gain_A_at_p0, pair.p != 0.0) ||
                             zero_gain(r.gain_A_at_p1, pair.p != 1.0));
  r.bob_weak = r.is_ne && (zero_gain(r.gain_B_at_q0, pair.q != 0.0) ||
                           zero_gain(r.gain_B_at_q1, pair.q != 1.0));
  r.is_strict_boundary = r.alice_weak || r.bob_weak;
  return r;
}

inline NashReport is_nash(const GameMatrix& game, const EprDistribution& dist,
                          const MixedStrategyPair& pair, double tol = kNashTolerance) {
  return is_nash(pure_payoffs(game, dist), pair, tol);
}

/// Brackets for the pair (1, 1/2). That pair is a NE exactly when
/// bracket_A <= 0 and bracket_B = 0.
inline BracketValues nash_brackets_one_half(const GameMatrix& game, const EprDistribution& dist) {
  const PayoffTable t = pure_payoffs(game, dist);
  BracketValues v;
  v.bracket_A = t.at(1, 0).alice + t.at(1, 1).alice - t.at(0, 0).alice - t.at(0, 1).alice;
  v.bracket_B = t.at(0, 0).bob - t.at(0, 1).bob;
  return v;
}

/// Brackets for the pair (1/2, 1/2). Since the deviation direction (1/2 - p)
/// takes both signs, that pair is a NE only when both brackets vanish, so it
/// cannot be tied to the sign of the Bell discriminant.
inline HalfHalfBrackets check_half_half_degeneracy(const GameMatrix& game,
                                                   const EprDistribution& dist) {
  const PayoffTable t = pure_payoffs(game, dist);
  HalfHalfBrackets h;
  h.alice = t.at(0, 0).alice + t.at(0, 1).alice - t.at(1, 0).alice - t.at(1, 1).alice;
  h.bob = t.at(0, 0).bob - t.at(0, 1).bob + t.at(1, 0).bob - t.at(1, 1).bob;
  return h;
}

/// Grid oracle: every pair on the grid_n x grid_n lattice over [0,1]^2 from
/// which no lattice deviation gains more than tol. The lattice contains the
/// corners, so corner deviations are covered. Sorted by (p, q).
inline std::vector<MixedStrategyPair> brute_force_nash(const GameMatrix& game,
                                                       const EprDistribution& dist, int grid_n,
                                                       double tol = kNashTolerance) {
  if (grid_n < 2) throw std::invalid_argument("grid_n must be at least 2");
  const auto n = static_cast<std::size_t>(grid_n);
  const PayoffTable table = pure_payoffs(game, dist);
  std::vector<double> axis(n);
  for (std::size_t i = 0; i < n; ++i) axis[i] = static_cast<double>(i) / static_cast<double>(n - 1);
  axis.back() = 1.0;

  // alice[i][j] = Pi_A(axis[i], axis[j]); bob likewise.
  std::vector<std::vector<PayoffPair>> pay(n, std::vector<PayoffPair>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) pay[i][j] = mixed_payoff(table, {axis[i], axis[j]});
  }
  // Best lattice response value of Alice against each q column, and of Bob
  // against each p row.
  std::vector<double> alice_best(n, -std::numeric_limits<double>::infinity());
  std::vector<double> bob_best(n, -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      alice_best[j] = std::max(alice_best[j], pay[i][j].alice);
      bob_best[i] = std::max(bob_best[i], pay[i][j].bob);
    }
  }
  std::vector<MixedStrategyPair> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (alice_best[j] - pay[i][j].alice <= tol && bob_best[i] - pay[i][j].bob <= tol) {
        out.push_back({axis[i], axis[j]});
      }
    }
  }
  return out;
}

}  // namespace eprgame

#endif  // EPRGAME_NASH_HPP_
