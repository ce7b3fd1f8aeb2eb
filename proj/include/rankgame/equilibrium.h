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

#ifndef RANKGAME_EQUILIBRIUM_H_
#define RANKGAME_EQUILIBRIUM_H_

#include <optional>
#include <string>

#include "rankgame/params.h"

namespace rankgame {

// Tolerance on both regime comparisons (w vs gamma*f and the beta threshold).
inline constexpr double kClassifyEps = 1e-12;

enum class RegimeKind {
  kNoBanCheat,        // w < gamma*f: app cheats, platform never bans
  kBanCheat,          // beta above the honesty threshold: cheat, ban on s
  kMixed,             // both players mix
  kBoundary,          // equality in a regime condition, possibly non-unique
  kTrivialTopRating,  // r = 1
  kAlphaZeroPure,     // perfect alert; platform bans on s
};

struct Regime {
  RegimeKind kind = RegimeKind::kMixed;
  bool cheats = false;  // only meaningful for kAlphaZeroPure

  friend bool operator==(const Regime&, const Regime&) = default;
};

// "NoBanCheat", "BanCheat", "Mixed", "Boundary", "TrivialTopRating",
// "AlphaZeroPure(cheat)", "AlphaZeroPure(honest)".
std::string RegimeName(const Regime& regime);
std::optional<Regime> ParseRegime(std::string_view name);

class RegimeMismatch : public Error {
 public:
  using Error::Error;
};

// The alert s has probability zero under the given cheat probability.
class SignalImpossible : public Error {
 public:
  using Error::Error;
};

// l - alpha*l + r - r*l: the value of beta above which cheating beats
// honesty against a platform that always bans on s.
double HonestyThreshold(const GameParams& params);

Regime ClassifyRegime(const GameParams& params, double eps = kClassifyEps);

// Bayes belief that the app cheated given alert s.
double PosteriorCheatGivenSignal(const GameParams& params, double p_cheat);

// Cheat probability that leaves the platform indifferent at s. Requires
// w > gamma*f and alpha > 0.
double MixedCheatProbability(const GameParams& params);

// Ban probability that leaves the app indifferent. Requires beta below the
// honesty threshold.
double MixedBanProbability(const GameParams& params);

struct Equilibrium {
  Regime regime;
  StrategyProfile profile;
  std::optional<double> posterior_cheat_given_s;  // empty when Pr(s) = 0
  double eu_app = 0.0;
  double eu_platform = 0.0;
  bool non_unique = false;
};

Equilibrium SolveEquilibrium(const GameParams& params);

}  // namespace rankgame

#endif  // RANKGAME_EQUILIBRIUM_H_
