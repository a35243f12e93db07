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

#ifndef EPRGAME_GAME_HPP_
#define EPRGAME_GAME_HPP_

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "eprgame/probability.hpp"

namespace eprgame {

/// Payoff coefficients: playing block k and observing outcome j pays
/// (a[4k+j], b[4k+j]) to (Alice, Bob). Same layout as EprDistribution.
struct GameMatrix {
  std::array<double, kNumOutcomes> a{};
  std::array<double, kNumOutcomes> b{};

  static GameMatrix constant(double value) {
    GameMatrix g;
    g.a.fill(value);
    g.b.fill(value);
    return g;
  }

  friend bool operator==(const GameMatrix&, const GameMatrix&) = default;
};

// p: probability that Alice measures along S1; q: that Bob measures along S1'.
struct MixedStrategyPair {
  double p = 0.0;
  double q = 0.0;

  friend auto operator<=>(const MixedStrategyPair&, const MixedStrategyPair&) = default;
};

struct PayoffPair {
  double alice = 0.0;
  double bob = 0.0;

  friend bool operator==(const PayoffPair&, const PayoffPair&) = default;
};

// entry[alice_dir][bob_dir], direction 0 = S1 / S1', 1 = S2 / S2'.
struct PayoffTable {
  std::array<std::array<PayoffPair, 2>, 2> entry{};

  const PayoffPair& at(std::size_t alice_dir, std::size_t bob_dir) const {
    return entry[alice_dir][bob_dir];
  }

  friend bool operator==(const PayoffTable&, const PayoffTable&) = default;
};

inline void check_game(const GameMatrix& game) {
  for (std::size_t i = 0; i < kNumOutcomes; ++i) {
    if (!std::isfinite(game.a[i]) || !std::isfinite(game.b[i])) {
      throw std::invalid_argument("game coefficient " + std::to_string(i + 1) + " is not finite");
    }
  }
}

inline void check_strategy(const MixedStrategyPair& s) {
  auto in_unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
  if (!in_unit(s.p) || !in_unit(s.q)) {
    throw std::invalid_argument("strategy probabilities p and q must lie in [0, 1]");
  }
}

inline PayoffTable pure_payoffs(const GameMatrix& game, const EprDistribution& dist) {
  PayoffTable table;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      const std::size_t base = 4 * block_index(a, b);
      PayoffPair& cell = table.entry[a][b];
      for (std::size_t j = 0; j < 4; ++j) {
        cell.alice += game.a[base + j] * dist.eps[base + j];
        cell.bob += game.b[base + j] * dist.eps[base + j];
      }
    }
  }
  return table;
}

// (p, 1-p) . table . (q, 1-q)^T for each player.
inline PayoffPair mixed_payoff(const PayoffTable& table, const MixedStrategyPair& s) {
  const std::array<double, 2> wa = {s.p, 1.0 - s.p};
  const std::array<double, 2> wb = {s.q, 1.0 - s.q};
  PayoffPair out;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      out.alice += wa[a] * wb[b] * table.entry[a][b].alice;
      out.bob += wa[a] * wb[b] * table.entry[a][b].bob;
    }
  }
  return out;
}

inline PayoffPair mixed_payoff(const GameMatrix& game, const EprDistribution& dist,
                               const MixedStrategyPair& s) {
  check_strategy(s);
  return mixed_payoff(pure_payoffs(game, dist), s);
}

/// Block-constant game whose payoffs no longer depend on the distribution:
/// the classical symmetric bimatrix ((alpha,alpha), (beta,gamma); (gamma,beta),
/// (delta,delta)). (3, 0, 5, 1) is the Prisoners' Dilemma.
inline GameMatrix reduce_symmetric(double alpha, double beta, double gamma, double delta) {
  GameMatrix g;
  for (std::size_t j = 0; j < 4; ++j) {
    g.a[j] = alpha;
    g.b[j] = alpha;
    g.a[4 + j] = beta;
    g.b[4 + j] = gamma;
    g.a[8 + j] = gamma;
    g.b[8 + j] = beta;
    g.a[12 + j] = delta;
    g.b[12 + j] = delta;
  }
  return g;
}

}  // namespace eprgame

#endif  // EPRGAME_GAME_HPP_
