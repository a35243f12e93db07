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

#ifndef EPRGAME_PROBABILITY_HPP_
#define EPRGAME_PROBABILITY_HPP_

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eprgame {

// Residual tolerances for constraint checks.
inline constexpr double kExternalTolerance = 1e-9;  // data read from files
inline constexpr double kInternalTolerance = 1e-12;  // data we generated

inline constexpr std::size_t kNumOutcomes = 16;
inline constexpr std::size_t kNumBlocks = 4;
inline constexpr std::size_t kNumIndependent = 8;

// Direction-pair blocks, in storage order. Alice's direction is S1 or S2,
// Bob's is S1' or S2'.
enum class Block : std::size_t {
  kS1S1p = 0,
  kS1S2p = 1,
  kS2S1p = 2,
  kS2S2p = 3,
};

constexpr std::size_t block_index(std::size_t alice_dir, std::size_t bob_dir) {
  return 2 * alice_dir + bob_dir;
}

// Human-readable label "eps<k>" with the 1-based index used in the
// literature and in all user-facing messages.
inline std::string epsilon_label(std::size_t zero_based) {
  return "eps" + std::to_string(zero_based + 1);
}

/// Joint outcome probabilities of an EPR experiment with two directions per
/// party. Storage is 0-based: entry 4*k + j is outcome j of block k, where
/// outcomes run (+1,+1), (+1,-1), (-1,+1), (-1,-1).
struct EprDistribution {
  std::array<double, kNumOutcomes> eps{};

  double operator[](std::size_t i) const { return eps[i]; }
  double& operator[](std::size_t i) { return eps[i]; }

  std::span<const double, 4> block(std::size_t k) const {
    return std::span<const double, 4>(eps.data() + 4 * k, 4);
  }

  static EprDistribution uniform() {
    EprDistribution d;
    d.eps.fill(0.25);
    return d;
  }

  friend bool operator==(const EprDistribution&, const EprDistribution&) = default;
};

/// The eight probabilities (eps1, eps4, eps5, eps8, eps9, eps12, eps14, eps15)
/// from which the remaining eight follow via normalization and locality.
struct IndependentProbs {
  std::array<double, kNumIndependent> mu{};

  friend bool operator==(const IndependentProbs&, const IndependentProbs&) = default;
};

// 0-based positions in EprDistribution::eps of the independent set.
inline constexpr std::array<std::size_t, kNumIndependent> kIndependentIndices = {
    0, 3, 4, 7, 8, 11, 13, 14};

// 0-based positions of the dependent set, in the order they are solved for.
inline constexpr std::array<std::size_t, kNumIndependent> kDependentIndices = {
    1, 2, 5, 6, 9, 10, 12, 15};

struct CorrelationSet {
  double e11 = 0.0;  // <S1 S1'>
  double e12 = 0.0;  // <S1 S2'>
  double e21 = 0.0;  // <S2 S1'>
  double e22 = 0.0;  // <S2 S2'>
  double delta = 0.0;
};

struct ConstraintViolation {
  std::string constraint;
  double residual = 0.0;
};

struct ConstraintReport {
  std::vector<ConstraintViolation> violations;
  bool is_valid = true;
  // Set only for valid distributions: whether the distribution lies in the
  // local (Bell) polytope, i.e. all four CHSH combinations are within [-2, 2].
  std::optional<bool> is_local_polytope_member;
};

namespace detail {

// The eight linear solutions for the dependent probabilities. Valid for any
// real input; range checking is the caller's business.
inline EprDistribution complete_linear(const std::array<double, kNumIndependent>& mu) {
  const double e1 = mu[0], e4 = mu[1], e5 = mu[2], e8 = mu[3];
  const double e9 = mu[4], e12 = mu[5], e14 = mu[6], e15 = mu[7];
  EprDistribution d;
  for (std::size_t k = 0; k < kNumIndependent; ++k) d.eps[kIndependentIndices[k]] = mu[k];
  d.eps[1] = (1 - e1 - e4 + e5 - e8 - e9 + e12 + e14 - e15) / 2;
  d.eps[2] = (1 - e1 - e4 - e5 + e8 + e9 - e12 - e14 + e15) / 2;
  d.eps[5] = (1 + e1 - e4 - e5 - e8 - e9 + e12 + e14 - e15) / 2;
  d.eps[6] = (1 - e1 + e4 - e5 - e8 + e9 - e12 - e14 + e15) / 2;
  d.eps[9] = (1 - e1 + e4 + e5 - e8 - e9 - e12 + e14 - e15) / 2;
  d.eps[10] = (1 + e1 - e4 - e5 + e8 - e9 - e12 - e14 + e15) / 2;
  d.eps[12] = (1 - e1 + e4 + e5 - e8 + e9 - e12 - e14 - e15) / 2;
  d.eps[15] = (1 + e1 - e4 - e5 + e8 - e9 + e12 - e14 - e15) / 2;
  return d;
}

inline double block_correlation(std::span<const double, 4> b) {
  return b[0] - b[1] - b[2] + b[3];
}

// One side of a locality equality: sum of two 0-based entries.
struct LocalityEquality {
  std::array<std::size_t, 2> lhs;
  std::array<std::size_t, 2> rhs;
};

// Alice's marginal must not depend on Bob's direction and vice versa.
inline constexpr std::array<LocalityEquality, 8> kLocalityEqualities = {{
    {{0, 1}, {4, 5}},     // eps1+eps2 = eps5+eps6
    {{0, 2}, {8, 10}},    // eps1+eps3 = eps9+eps11
    {{8, 9}, {12, 13}},   // eps9+eps10 = eps13+eps14
    {{4, 6}, {12, 14}},   // eps5+eps7 = eps13+eps15
    {{2, 3}, {6, 7}},     // eps3+eps4 = eps7+eps8
    {{10, 11}, {14, 15}}, // eps11+eps12 = eps15+eps16
    {{1, 3}, {9, 11}},    // eps2+eps4 = eps10+eps12
    {{5, 7}, {13, 15}},   // eps6+eps8 = eps14+eps16
}};

inline std::string locality_label(const LocalityEquality& eq) {
  return "locality: " + epsilon_label(eq.lhs[0]) + "+" + epsilon_label(eq.lhs[1]) + " = " +
         epsilon_label(eq.rhs[0]) + "+" + epsilon_label(eq.rhs[1]);
}

}  // namespace detail

/// Fills in the dependent probabilities from the independent set. The
/// completed entries may fall outside [0, 1]; use validate() to find out.
inline EprDistribution complete_from_independent(const IndependentProbs& mu) {
  for (std::size_t k = 0; k < kNumIndependent; ++k) {
    const double v = mu.mu[k];
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw std::invalid_argument("independent probability " +
                                  epsilon_label(kIndependentIndices[k]) +
                                  " must lie in [0, 1], got " + std::to_string(v));
    }
  }
  return detail::complete_linear(mu.mu);
}

inline IndependentProbs independent_part(const EprDistribution& dist) {
  IndependentProbs mu;
  for (std::size_t k = 0; k < kNumIndependent; ++k) mu.mu[k] = dist.eps[kIndependentIndices[k]];
  return mu;
}

inline CorrelationSet correlations(const EprDistribution& dist) {
  CorrelationSet c;
  c.e11 = detail::block_correlation(dist.block(0));
  c.e12 = detail::block_correlation(dist.block(1));
  c.e21 = detail::block_correlation(dist.block(2));
  c.e22 = detail::block_correlation(dist.block(3));
  c.delta = c.e11 + c.e12 + c.e21 - c.e22;
  return c;
}

/// CHSH sum written through the independent set only. Agrees with
/// correlations(dist).delta whenever normalization and locality hold.
inline double chsh_delta_mu(const EprDistribution& dist) {
  double sum = 0.0;
  for (std::size_t i : kIndependentIndices) sum += dist.eps[i];
  return 2.0 * (sum - 2.0);
}

/// 2 - |Delta|; negative means the CHSH form of Bell's inequality fails.
inline double bell_discriminant(const EprDistribution& dist) {
  return 2.0 - std::abs(chsh_delta_mu(dist));
}

/// Reports every range, normalization and locality residual above tol.
inline ConstraintReport validate(const EprDistribution& dist, double tol = kExternalTolerance) {
  ConstraintReport report;
  auto flag = [&](std::string id, double residual) {
    if (!(residual <= tol)) report.violations.push_back({std::move(id), residual});
  };
  for (std::size_t i = 0; i < kNumOutcomes; ++i) {
    const double v = dist.eps[i];
    if (!std::isfinite(v)) {
      report.violations.push_back({"range: " + epsilon_label(i) + " not finite",
                                   std::numeric_limits<double>::infinity()});
      continue;
    }
    const double below = -v;
    const double above = v - 1.0;
    if (below > 0.0) flag("range: " + epsilon_label(i) + " >= 0", below);
    if (above > 0.0) flag("range: " + epsilon_label(i) + " <= 1", above);
  }
  for (std::size_t k = 0; k < kNumBlocks; ++k) {
    double sum = 0.0;
    for (double v : dist.block(k)) sum += v;
    flag("normalization: " + epsilon_label(4 * k) + ".." + epsilon_label(4 * k + 3) + " sum to 1",
         std::abs(sum - 1.0));
  }
  for (const auto& eq : detail::kLocalityEqualities) {
    const double lhs = dist.eps[eq.lhs[0]] + dist.eps[eq.lhs[1]];
    const double rhs = dist.eps[eq.rhs[0]] + dist.eps[eq.rhs[1]];
    flag(detail::locality_label(eq), std::abs(lhs - rhs));
  }
  report.is_valid = report.violations.empty();
  if (report.is_valid) {
    const CorrelationSet c = correlations(dist);
    const std::array<double, 4> chsh = {
        c.e11 + c.e12 + c.e21 - c.e22,
        c.e11 + c.e12 - c.e21 + c.e22,
        c.e11 - c.e12 + c.e21 + c.e22,
        -c.e11 + c.e12 + c.e21 + c.e22,
    };
    bool local = true;
    for (double s : chsh) local = local && std::abs(s) <= 2.0 + tol;
    report.is_local_polytope_member = local;
  }
  return report;
}

}  // namespace eprgame

#endif  // EPRGAME_PROBABILITY_HPP_
