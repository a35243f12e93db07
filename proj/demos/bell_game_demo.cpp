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

// Walks through the Bell game: builds the family game, then checks whether
// (p, q) = (1, 1/2) is an equilibrium under a classical source and under
// the quantum source that maximizes the CHSH sum.

#include <cstdio>

#include "eprgame/eprgame.hpp"

namespace {

void report(const char* label, const eprgame::GameMatrix& game,
            const eprgame::EprDistribution& dist) {
  const auto c = eprgame::correlations(dist);
  const auto r = eprgame::is_nash(game, dist, {1.0, 0.5});
  const auto payoff = eprgame::mixed_payoff(game, dist, {1.0, 0.5});
  std::printf("%-22s Delta = %+.6f  2-|Delta| = %+.6f  payoff (A, B) = (%.4f, %.4f)  %s\n",
              label, c.delta, eprgame::bell_discriminant(dist), payoff.alice, payoff.bob,
              r.is_ne ? (r.alice_weak ? "NE (weak)" : "NE") : "not NE");
}

}  // namespace

int main() {
  using namespace eprgame;
  const GameMatrix game = generate(FamilyParams::unit(FamilyCase::kNonNegativeDelta));

  std::printf("Alice's payoff coefficients:");
  for (double v : game.a) std::printf(" %g", v);
  std::printf("\n\n");

  report("uniform (classical)", game, EprDistribution::uniform());

  LocalModel aligned;
  aligned.weights[1] = 1.0;  // S1=S2=S1'=+1, S2'=-1
  report("deterministic local", game, local_deterministic_mixture(aligned));

  report("singlet, max CHSH", game, born_distribution(max_chsh_config(+1)));
  report("singlet, min CHSH", game, born_distribution(max_chsh_config(-1)));

  const auto s = simulate(game, born_distribution(max_chsh_config(+1)), {1.0, 0.5}, 200000, 1);
  std::printf("\nsampled payoff at (1, 1/2), max CHSH: %.4f +/- %.4f (200000 runs)\n",
              s.payoff_mean.alice, s.payoff_stderr.alice);
  return 0;
}
