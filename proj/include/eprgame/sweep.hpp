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

#ifndef EPRGAME_SWEEP_HPP_
#define EPRGAME_SWEEP_HPP_

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eprgame/game.hpp"
#include "eprgame/nash.hpp"
#include "eprgame/probability.hpp"
#include "eprgame/quantum_source.hpp"

namespace eprgame {

inline std::string_view angle_slot_name(AngleSlot slot) {
  static constexpr std::array<std::string_view, 4> kNames = {"A1", "A2", "B1", "B2"};
  return kNames[static_cast<std::size_t>(slot)];
}

inline AngleSlot angle_slot_from_string(std::string_view s) {
  for (std::size_t k = 0; k < 4; ++k) {
    const auto slot = static_cast<AngleSlot>(k);
    if (s == angle_slot_name(slot)) return slot;
  }
  throw std::invalid_argument("unknown angle '" + std::string(s) + "', expected A1, A2, B1 or B2");
}

/// Sweeps an offset t over [lo, hi] in `steps` evenly spaced points; each
/// swept angle is set to its baseline value plus t.
struct SweepSpec {
  std::vector<AngleSlot> swept;
  double lo = 0.0;
  double hi = 0.0;
  int steps = 2;
  MeasurementConfig baseline;
  GameMatrix game;
  MixedStrategyPair pair{1.0, 0.5};
  double tol = kNashTolerance;
};

struct SweepRow {
  double t = 0.0;
  std::array<double, 4> angles{};
  double delta = 0.0;
  double discriminant = 0.0;
  double bracket_A = 0.0;
  double bracket_B = 0.0;
  bool is_ne = false;
  bool is_strict_boundary = false;
  bool alice_weak = false;
  bool bob_weak = false;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

inline SweepRow evaluate_sweep_point(const SweepSpec& spec, double t) {
  SweepRow row;
  row.t = t;
  MeasurementConfig config = spec.baseline;
  for (AngleSlot slot : spec.swept) config.angles[static_cast<std::size_t>(slot)] += t;
  row.angles = config.angles;
  const EprDistribution dist = born_distribution(config);
  row.delta = correlations(dist).delta;
  row.discriminant = 2.0 - std::abs(row.delta);
  const BracketValues br = nash_brackets_one_half(spec.game, dist);
  row.bracket_A = br.bracket_A;
  row.bracket_B = br.bracket_B;
  const NashReport report = is_nash(spec.game, dist, spec.pair, spec.tol);
  row.is_ne = report.is_ne;
  row.is_strict_boundary = report.is_strict_boundary;
  row.alice_weak = report.alice_weak;
  row.bob_weak = report.bob_weak;
  return row;
}

/// Rows in sweep order, one per step.
inline std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  if (spec.steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");
  if (!(spec.lo < spec.hi)) throw std::invalid_argument("sweep range needs lo < hi");
  if (spec.swept.empty()) throw std::invalid_argument("sweep needs at least one angle");
  check_game(spec.game);
  check_strategy(spec.pair);
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(spec.steps));
  for (int i = 0; i < spec.steps; ++i) {
    const double t = (i == spec.steps - 1)
                         ? spec.hi
                         : spec.lo + (spec.hi - spec.lo) * i / (spec.steps - 1);
    rows.push_back(evaluate_sweep_point(spec, t));
  }
  return rows;
}

}  // namespace eprgame

#endif  // EPRGAME_SWEEP_HPP_
