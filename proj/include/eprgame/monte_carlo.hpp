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

#ifndef EPRGAME_MONTE_CARLO_HPP_
#define EPRGAME_MONTE_CARLO_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "eprgame/game.hpp"
#include "eprgame/probability.hpp"
#include "eprgame/random.hpp"

namespace eprgame {

/// One simulated EPR run. Directions are 0 for S1 / S1' and 1 for S2 / S2';
/// outcomes are +1 or -1.
struct RunRecord {
  std::uint64_t run = 0;
  int alice_dir = 0;
  int bob_dir = 0;
  int x = 1;
  int y = 1;
  PayoffPair payoff;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

struct SimulationSummary {
  std::uint64_t n_runs = 0;
  std::uint64_t seed = 0;
  std::array<std::uint64_t, kNumOutcomes> counts{};
  std::array<std::uint64_t, kNumBlocks> block_visits{};
  // Per-block outcome frequencies; empty for blocks that were never played.
  std::array<std::optional<std::array<double, 4>>, kNumBlocks> empirical_blocks{};
  PayoffPair payoff_mean;
  PayoffPair payoff_stderr;

  friend bool operator==(const SimulationSummary&, const SimulationSummary&) = default;
};

/// Correlations from the empirical frequencies, or empty unless every block
/// was visited.
inline std::optional<CorrelationSet> empirical_correlations(const SimulationSummary& summary) {
  EprDistribution d;
  for (std::size_t k = 0; k < kNumBlocks; ++k) {
    if (!summary.empirical_blocks[k]) return std::nullopt;
    for (std::size_t j = 0; j < 4; ++j) d.eps[4 * k + j] = (*summary.empirical_blocks[k])[j];
  }
  return correlations(d);
}

using RunCallback = std::function<void(const RunRecord&)>;

/// Plays n i.i.d. runs. Each run draws, in this order from one Rng stream:
/// Alice's direction (S1 with probability p), Bob's direction (S1' with
/// probability q), then the outcome pair from the chosen block.
inline SimulationSummary simulate(const GameMatrix& game, const EprDistribution& dist,
                                  const MixedStrategyPair& s, std::uint64_t n, std::uint64_t seed,
                                  const RunCallback& on_run = {}) {
  if (n == 0) throw std::invalid_argument("number of runs must be at least 1");
  check_strategy(s);
  if (!validate(dist, kExternalTolerance).is_valid) {
    throw std::invalid_argument("distribution fails normalization/locality/range checks");
  }
  Rng rng(seed);
  SimulationSummary out;
  out.n_runs = n;
  out.seed = seed;

  // Welford accumulators.
  double mean_a = 0.0, mean_b = 0.0, m2_a = 0.0, m2_b = 0.0;
  for (std::uint64_t run = 0; run < n; ++run) {
    const std::size_t alice_dir = rng.bernoulli(s.p) ? 0 : 1;
    const std::size_t bob_dir = rng.bernoulli(s.q) ? 0 : 1;
    const std::size_t base = 4 * block_index(alice_dir, bob_dir);
    const double u = rng.uniform();
    std::size_t j = 0;
    double cumulative = dist.eps[base];
    while (j < 3 && u >= cumulative) cumulative += dist.eps[base + ++j];

    const std::size_t cell = base + j;
    ++out.counts[cell];
    ++out.block_visits[base / 4];
    const double pa = game.a[cell];
    const double pb = game.b[cell];
    const double count = static_cast<double>(run + 1);
    const double da = pa - mean_a;
    const double db = pb - mean_b;
    mean_a += da / count;
    mean_b += db / count;
    m2_a += da * (pa - mean_a);
    m2_b += db * (pb - mean_b);

    if (on_run) {
      on_run({run, static_cast<int>(alice_dir), static_cast<int>(bob_dir), j < 2 ? 1 : -1,
              j % 2 == 0 ? 1 : -1, {pa, pb}});
    }
  }

  for (std::size_t k = 0; k < kNumBlocks; ++k) {
    if (out.block_visits[k] == 0) continue;
    std::array<double, 4> freq{};
    for (std::size_t j = 0; j < 4; ++j) {
      freq[j] = static_cast<double>(out.counts[4 * k + j]) /
                static_cast<double>(out.block_visits[k]);
    }
    out.empirical_blocks[k] = freq;
  }
  out.payoff_mean = {mean_a, mean_b};
  if (n > 1) {
    const double nn = static_cast<double>(n);
    out.payoff_stderr = {std::sqrt(m2_a / (nn - 1) / nn), std::sqrt(m2_b / (nn - 1) / nn)};
  }
  return out;
}

}  // namespace eprgame

#endif  // EPRGAME_MONTE_CARLO_HPP_
