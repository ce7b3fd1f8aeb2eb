// Copyright 2026 The rankgame Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rankgame/game.h"

namespace rankgame {

bool OutcomeValid(const GameParams& params, const Outcome& outcome) {
  const double rating = outcome.rating_final;
  if (outcome.banned) {
    return rating == 0.0 && outcome.signal == Signal::kS;
  }
  if (outcome.signal == Signal::kS && rating != 1.0) return false;
  if (outcome.cheated) return rating == 1.0;
  return rating == 1.0 || rating == params.r();
}

PayoffPair LeafPayoffs(const GameParams& params, const Outcome& outcome) {
  if (outcome.banned) return {0.0, 0.0};
  const double revenue = params.gamma() * outcome.rating_final;
  const double reputation = outcome.cheated ? -params.w() : params.v();
  return {revenue * (1.0 - params.f()), revenue * params.f() + reputation};
}

PayoffPair ExpectedPayoffs(const GameParams& params,
                           const StrategyProfile& profile) {
  const double g = params.gamma();
  const double f = params.f();
  const double r = params.r();
  const double a = params.alpha();
  const double b = params.beta();
  const double l = params.l();
  const double pc = profile.p_cheat;
  const double pb = profile.p_ban_given_s;

  // Probability the app keeps rating 1, per type.
  const double keep_cheat = b + (1.0 - b) * (1.0 - pb);
  const double keep_honest_top = l * (1.0 - a * pb);

  const double app_cheat = g * (1.0 - f) * keep_cheat;
  const double app_honest = g * (1.0 - f) * ((1.0 - l) * r + keep_honest_top);

  const double plat_cheat = keep_cheat * (g * f - params.w());
  const double plat_honest =
      keep_honest_top * (g * f + params.v()) + (1.0 - l) * (g * r * f + params.v());

  return {pc * app_cheat + (1.0 - pc) * app_honest,
          pc * plat_cheat + (1.0 - pc) * plat_honest};
}

}  // namespace rankgame
