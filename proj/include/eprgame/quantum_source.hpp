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

#ifndef EPRGAME_QUANTUM_SOURCE_HPP_
#define EPRGAME_QUANTUM_SOURCE_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>

#include "eprgame/probability.hpp"
#include "eprgame/random.hpp"

namespace eprgame {

// Spin singlet (|01> - |10>)/sqrt(2).
struct SingletState {
  friend bool operator==(const SingletState&, const SingletState&) = default;
};

// cos(angle/2)|00> + sin(angle/2)|11>, angle in [0, pi/2]. Zero is a product
// state, pi/2 is maximally entangled.
struct SchmidtState {
  double angle = 0.0;
  friend bool operator==(const SchmidtState&, const SchmidtState&) = default;
};

using TwoQubitState = std::variant<SingletState, SchmidtState>;

enum class AngleSlot : std::size_t { kA1 = 0, kA2 = 1, kB1 = 2, kB2 = 3 };

/// A two-qubit pure state plus four in-plane measurement directions, given as
/// angles in radians: (theta_A1, theta_A2, theta_B1, theta_B2) for Alice's
/// S1, S2 and Bob's S1', S2'. The +1 outcome along angle t projects onto
/// cos(t/2)|0> + sin(t/2)|1>.
struct MeasurementConfig {
  TwoQubitState state = SingletState{};
  std::array<double, 4> angles{};

  friend bool operator==(const MeasurementConfig&, const MeasurementConfig&) = default;
};

/// Weights over the 16 deterministic local assignments. Assignment t gives
/// outcome -1 to S1 if bit 3 of t is set, S2 for bit 2, S1' for bit 1 and S2'
/// for bit 0; so t = 0 is (+1,+1,+1,+1) and t = 1 is (+1,+1,+1,-1).
struct LocalModel {
  std::array<double, 16> weights{};
};

namespace detail {

inline void check_config(const MeasurementConfig& config) {
  for (std::size_t k = 0; k < 4; ++k) {
    if (!std::isfinite(config.angles[k])) {
      throw std::invalid_argument("measurement angle " + std::to_string(k + 1) +
                                  " is not finite");
    }
  }
  if (const auto* s = std::get_if<SchmidtState>(&config.state)) {
    if (!std::isfinite(s->angle) || s->angle < 0.0 || s->angle > std::numbers::pi / 2) {
      throw std::invalid_argument("schmidt_angle must lie in [0, pi/2]");
    }
  }
}

// Expectation values <A>, <B>, <AB> for spin observables along in-plane
// angles ta (qubit 1) and tb (qubit 2).
struct SpinMoments {
  double alice = 0.0;
  double bob = 0.0;
  double joint = 0.0;
};

inline SpinMoments spin_moments(const TwoQubitState& state, double ta, double tb) {
  if (std::holds_alternative<SingletState>(state)) {
    return {0.0, 0.0, -std::cos(ta - tb)};
  }
  const double g = std::get<SchmidtState>(state).angle;
  return {std::cos(ta) * std::cos(g), std::cos(tb) * std::cos(g),
          std::cos(ta) * std::cos(tb) + std::sin(ta) * std::sin(tb) * std::sin(g)};
}

inline double singlet_chsh(const std::array<double, 4>& t) {
  return -(std::cos(t[0] - t[2]) + std::cos(t[0] - t[3]) + std::cos(t[1] - t[2]) -
           std::cos(t[1] - t[3]));
}

inline double wrap_angle(double t) { return std::remainder(t, 2 * std::numbers::pi); }

}  // namespace detail

/// Born-rule joint outcome probabilities for projective spin measurements.
inline EprDistribution born_distribution(const MeasurementConfig& config) {
  detail::check_config(config);
  EprDistribution d;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      const auto m = detail::spin_moments(config.state, config.angles[a], config.angles[2 + b]);
      const std::size_t base = 4 * block_index(a, b);
      for (std::size_t j = 0; j < 4; ++j) {
        const double x = (j < 2) ? 1.0 : -1.0;
        const double y = (j % 2 == 0) ? 1.0 : -1.0;
        d.eps[base + j] = (1.0 + x * m.alice + y * m.bob + x * y * m.joint) / 4.0;
      }
    }
  }
  return d;
}

/// A singlet configuration whose CHSH sum is sign * 2*sqrt(2). Found by a
/// coarse grid over (theta_A2, theta_B1, theta_B2) with theta_A1 = 0, then a
/// compass search from the best grid point and from `restarts` seeded
/// perturbations of it.
inline MeasurementConfig max_chsh_config(int sign, std::uint64_t seed = 0, int restarts = 4) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  constexpr double kTwoPi = 2 * std::numbers::pi;
  constexpr int kGrid = 24;
  const double s = static_cast<double>(sign);
  auto score = [&](const std::array<double, 4>& t) { return s * detail::singlet_chsh(t); };

  std::array<double, 4> best{};
  double best_score = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      for (int k = 0; k < kGrid; ++k) {
        const std::array<double, 4> t = {0.0, kTwoPi * i / kGrid, kTwoPi * j / kGrid,
                                         kTwoPi * k / kGrid};
        const double v = score(t);
        if (v > best_score) {
          best_score = v;
          best = t;
        }
      }
    }
  }

  auto refine = [&](std::array<double, 4> t) {
    double value = score(t);
    for (double step = kTwoPi / kGrid; step > 1e-11;) {
      bool improved = false;
      for (std::size_t c = 1; c < 4; ++c) {
        for (double dir : {1.0, -1.0}) {
          auto trial = t;
          trial[c] += dir * step;
          const double v = score(trial);
          if (v > value) {
            value = v;
            t = trial;
            improved = true;
          }
        }
      }
      if (!improved) step /= 2;
    }
    return t;
  };

  Rng rng(seed);
  auto winner = refine(best);
  for (int r = 0; r < restarts; ++r) {
    auto start = best;
    for (std::size_t c = 1; c < 4; ++c) start[c] += rng.uniform(-0.5, 0.5);
    const auto candidate = refine(start);
    if (score(candidate) > score(winner)) winner = candidate;
  }

  MeasurementConfig config;
  config.state = SingletState{};
  for (std::size_t c = 0; c < 4; ++c) config.angles[c] = detail::wrap_angle(winner[c]);

  const double target = s * 2.0 * std::numbers::sqrt2;
  const double achieved = correlations(born_distribution(config)).delta;
  if (std::abs(achieved - target) > 1e-9) {
    throw std::logic_error("max_chsh_config: search ended at Delta = " + std::to_string(achieved));
  }
  return config;
}

/// Joint probabilities induced by a mixture of deterministic local
/// assignments.
inline EprDistribution local_deterministic_mixture(const LocalModel& model) {
  double total = 0.0;
  for (std::size_t t = 0; t < 16; ++t) {
    const double w = model.weights[t];
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("local model weight " + std::to_string(t) +
                                  " must be non-negative");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > kExternalTolerance) {
    throw std::invalid_argument("local model weights sum to " + std::to_string(total) +
                                ", expected 1");
  }
  EprDistribution d;
  for (std::size_t t = 0; t < 16; ++t) {
    const double w = model.weights[t];
    if (w == 0.0) continue;
    // Outcome bit per observable: 1 means -1.
    const std::array<std::size_t, 4> bits = {(t >> 3) & 1u, (t >> 2) & 1u, (t >> 1) & 1u,
                                             t & 1u};
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 2; ++b) {
        const std::size_t j = 2 * bits[a] + bits[2 + b];
        d.eps[4 * block_index(a, b) + j] += w;
      }
    }
  }
  return d;
}

}  // namespace eprgame

#endif  // EPRGAME_QUANTUM_SOURCE_HPP_
