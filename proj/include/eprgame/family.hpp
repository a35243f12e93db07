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

#ifndef EPRGAME_FAMILY_HPP_
#define EPRGAME_FAMILY_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "eprgame/game.hpp"
#include "eprgame/nash.hpp"
#include "eprgame/probability.hpp"
#include "eprgame/random.hpp"

namespace eprgame {

// Sign case of the CHSH sum that a family targets. Case A games make (1, 1/2)
// a NE exactly when Delta >= 2, case B games exactly when Delta <= -2.
enum class FamilyCase {
  kNonNegativeDelta,  // "A"
  kNegativeDelta,     // "B"
};

inline std::string_view to_string(FamilyCase c) {
  return c == FamilyCase::kNonNegativeDelta ? "A" : "B";
}

inline FamilyCase family_case_from_string(std::string_view s) {
  if (s == "A" || s == "a" || s == "nonnegative") return FamilyCase::kNonNegativeDelta;
  if (s == "B" || s == "b" || s == "negative") return FamilyCase::kNegativeDelta;
  throw std::invalid_argument("unknown family case '" + std::string(s) + "', expected A or B");
}

/// Free constants of a family game.
///   free_a: (a1, a4, a5, a8, a12, a14, a15)
///   b_top:  b1 = b2 = b5 = b6
///   b_bottom: b3 = b4 = b7 = b8
///   b_rest: b9..b16, which do not enter Bob's bracket
struct FamilyParams {
  std::array<double, 7> free_a{};
  double b_top = 0.0;
  double b_bottom = 0.0;
  std::array<double, 8> b_rest{};
  FamilyCase family_case = FamilyCase::kNonNegativeDelta;

  static FamilyParams unit(FamilyCase c) {
    FamilyParams p;
    p.free_a.fill(1.0);
    p.b_top = 1.0;
    p.b_bottom = 1.0;
    p.b_rest.fill(1.0);
    p.family_case = c;
    return p;
  }

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

inline constexpr std::array<std::size_t, 7> kFreeAIndices = {0, 3, 4, 7, 11, 13, 14};
inline constexpr std::array<std::size_t, 4> kBTopIndices = {0, 1, 4, 5};
inline constexpr std::array<std::size_t, 4> kBBottomIndices = {2, 3, 6, 7};

namespace detail {

// Constant terms of the nine dependent a-coefficients (a2, a3, a6, a7, a9,
// a10, a11, a13, a16) for each case.
inline constexpr std::array<double, 9> kCaseAOffsets = {0, -4, -4, 0, -4, 0, 0, 4, 0};
inline constexpr std::array<double, 9> kCaseBOffsets = {-4, 8, 8, -4, 12, 4, 4, -8, 4};
inline constexpr std::array<std::size_t, 9> kDependentAIndices = {1, 2, 5, 6, 8, 9, 10, 12, 15};

inline std::array<double, 9> dependent_a(const std::array<double, 7>& f, FamilyCase c) {
  const double a1 = f[0], a4 = f[1], a5 = f[2], a8 = f[3], a12 = f[4], a14 = f[5], a15 = f[6];
  const auto& k = (c == FamilyCase::kNonNegativeDelta) ? kCaseAOffsets : kCaseBOffsets;
  return {
      -a5 + a12 + a15 + k[0],                          // a2
      a1 + a4 + a5 - a12 - a15 + k[1],                 // a3
      a4 + a5 + a8 - a12 - a15 + k[2],                 // a6
      -a4 + a12 + a15 + k[3],                          // a7
      a1 + a4 + a5 + a8 - a12 - a14 - a15 + k[4],      // a9
      a4 + a8 - a14 + k[5],                            // a10
      a1 + a5 - a15 + k[6],                            // a11
      -a4 - a8 + a12 + a14 + a15 + k[7],               // a13
      a4 + a8 - a12 + k[8],                            // a16
  };
}

}  // namespace detail

/// Builds the family game for the given constants. Bob's bracket for (1, 1/2)
/// vanishes identically and Alice's equals 2 - Delta (case A) or 2 + Delta
/// (case B) on every no-signaling distribution.
inline GameMatrix generate(const FamilyParams& params) {
  GameMatrix g;
  for (std::size_t k = 0; k < 7; ++k) g.a[kFreeAIndices[k]] = params.free_a[k];
  const auto dep = detail::dependent_a(params.free_a, params.family_case);
  for (std::size_t k = 0; k < 9; ++k) g.a[detail::kDependentAIndices[k]] = dep[k];
  for (std::size_t i : kBTopIndices) g.b[i] = params.b_top;
  for (std::size_t i : kBBottomIndices) g.b[i] = params.b_bottom;
  for (std::size_t k = 0; k < 8; ++k) g.b[8 + k] = params.b_rest[k];
  return g;
}

/// Draws mu uniformly from [0,1]^8 until its completion lies in
/// [-tol, 1+tol]^16.
inline EprDistribution sample_valid_distribution(Rng& rng, double tol = kInternalTolerance,
                                                 std::uint64_t max_draws = 100'000'000) {
  for (std::uint64_t draw = 0; draw < max_draws; ++draw) {
    std::array<double, kNumIndependent> mu;
    for (double& v : mu) v = rng.uniform();
    EprDistribution d = detail::complete_linear(mu);
    const bool ok = std::all_of(d.eps.begin(), d.eps.end(),
                                [tol](double v) { return v >= -tol && v <= 1.0 + tol; });
    if (ok) return d;
  }
  throw std::runtime_error("sample_valid_distribution: no valid draw within limit");
}

struct FamilyVerification {
  FamilyCase family_case = FamilyCase::kNonNegativeDelta;
  int samples = 0;
  std::uint64_t seed = 0;
  double max_residual_A = 0.0;  // max |bracket_A - (2 -/+ Delta)|
  double max_residual_B = 0.0;  // max |bracket_B|
  double tolerance = kInternalTolerance;
  bool passed = false;
};

/// Checks the defining bracket identities of a family on `samples` random
/// valid distributions. A failed check is reported, not thrown.
inline FamilyVerification verify_family(const GameMatrix& game, FamilyCase family_case,
                                        int samples, std::uint64_t seed,
                                        double tol = kInternalTolerance) {
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  FamilyVerification v;
  v.family_case = family_case;
  v.samples = samples;
  v.seed = seed;
  v.tolerance = tol;
  const double sign = family_case == FamilyCase::kNonNegativeDelta ? -1.0 : 1.0;
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const EprDistribution d = sample_valid_distribution(rng);
    const BracketValues br = nash_brackets_one_half(game, d);
    const double expected = 2.0 + sign * chsh_delta_mu(d);
    v.max_residual_A = std::max(v.max_residual_A, std::abs(br.bracket_A - expected));
    v.max_residual_B = std::max(v.max_residual_B, std::abs(br.bracket_B));
  }
  v.passed = v.max_residual_A < tol && v.max_residual_B < tol;
  return v;
}

/// Recovers the family constants of `game` if it satisfies either case's
/// coefficient equations and the b constraints within tol.
inline std::optional<FamilyParams> membership_test(const GameMatrix& game,
                                                   double tol = kExternalTolerance) {
  FamilyParams p;
  for (std::size_t k = 0; k < 7; ++k) p.free_a[k] = game.a[kFreeAIndices[k]];
  p.b_top = game.b[0];
  p.b_bottom = game.b[2];
  for (std::size_t k = 0; k < 8; ++k) p.b_rest[k] = game.b[8 + k];
  for (std::size_t i : kBTopIndices) {
    if (!(std::abs(game.b[i] - p.b_top) <= tol)) return std::nullopt;
  }
  for (std::size_t i : kBBottomIndices) {
    if (!(std::abs(game.b[i] - p.b_bottom) <= tol)) return std::nullopt;
  }
  for (FamilyCase c : {FamilyCase::kNonNegativeDelta, FamilyCase::kNegativeDelta}) {
    const auto dep = detail::dependent_a(p.free_a, c);
    bool match = true;
    for (std::size_t k = 0; k < 9 && match; ++k) {
      match = std::abs(game.a[detail::kDependentAIndices[k]] - dep[k]) <= tol;
    }
    if (match) {
      p.family_case = c;
      return p;
    }
  }
  return std::nullopt;
}

}  // namespace eprgame

#endif  // EPRGAME_FAMILY_HPP_
