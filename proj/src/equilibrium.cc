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

#include "rankgame/equilibrium.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "rankgame/game.h"

namespace rankgame {
namespace {

double CheatFormula(const GameParams& p) {
  const double gf = p.gamma() * p.f();
  const double honest_alarm = p.alpha() * p.l() * (gf + p.v());
  return honest_alarm / (honest_alarm + (1.0 - p.beta()) * (p.w() - gf));
}

double BanDenominator(const GameParams& p) {
  return 1.0 - p.beta() - p.alpha() * p.l();
}

double BanFormula(const GameParams& p) {
  return (1.0 - p.r()) * (1.0 - p.l()) / BanDenominator(p);
}

double Clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

std::optional<double> PosteriorIfDefined(const GameParams& p, double p_cheat) {
  try {
    return PosteriorCheatGivenSignal(p, p_cheat);
  } catch (const SignalImpossible&) {
    return std::nullopt;
  }
}

// One admissible equilibrium on a regime boundary. When the indifference
// formulas are defined they are used (clamped); otherwise a pure profile
// that still has zero regret.
StrategyProfile BoundaryProfile(const GameParams& p) {
  if (p.alpha() > 0 && BanDenominator(p) > 0) {
    return {Clamp01(CheatFormula(p)), Clamp01(BanFormula(p))};
  }
  if (p.alpha() == 0) {
    return {p.beta() > HonestyThreshold(p) ? 1.0 : 0.0, 1.0};
  }
  return {1.0, 1.0};
}

}  // namespace

std::string RegimeName(const Regime& regime) {
  switch (regime.kind) {
    case RegimeKind::kNoBanCheat: return "NoBanCheat";
    case RegimeKind::kBanCheat: return "BanCheat";
    case RegimeKind::kMixed: return "Mixed";
    case RegimeKind::kBoundary: return "Boundary";
    case RegimeKind::kTrivialTopRating: return "TrivialTopRating";
    case RegimeKind::kAlphaZeroPure:
      return regime.cheats ? "AlphaZeroPure(cheat)" : "AlphaZeroPure(honest)";
  }
  return "?";
}

std::optional<Regime> ParseRegime(std::string_view name) {
  for (auto kind : {RegimeKind::kNoBanCheat, RegimeKind::kBanCheat,
                    RegimeKind::kMixed, RegimeKind::kBoundary,
                    RegimeKind::kTrivialTopRating}) {
    if (RegimeName({kind, false}) == name) return Regime{kind, false};
  }
  for (bool cheats : {false, true}) {
    Regime reg{RegimeKind::kAlphaZeroPure, cheats};
    if (RegimeName(reg) == name) return reg;
  }
  return std::nullopt;
}

double HonestyThreshold(const GameParams& p) {
  const double l = p.l();
  const double r = p.r();
  return l - p.alpha() * l + r - r * l;
}

Regime ClassifyRegime(const GameParams& p, double eps) {
  if (p.top_rating()) return {RegimeKind::kTrivialTopRating};
  const double gf = p.gamma() * p.f();
  if (std::abs(p.w() - gf) <= eps) return {RegimeKind::kBoundary};
  // Part 1 does not depend on the alert quality: at posterior 1 keeping the
  // app earns gamma*f - w > 0, so the platform never bans.
  if (p.w() < gf) return {RegimeKind::kNoBanCheat};
  const double threshold = HonestyThreshold(p);
  if (p.alpha() == 0) {
    return {RegimeKind::kAlphaZeroPure, p.beta() > threshold};
  }
  if (std::abs(threshold - p.beta()) <= eps) return {RegimeKind::kBoundary};
  if (threshold < p.beta()) return {RegimeKind::kBanCheat};
  return {RegimeKind::kMixed};
}

double PosteriorCheatGivenSignal(const GameParams& p, double p_cheat) {
  const double from_cheat = p_cheat * (1.0 - p.beta());
  const double denom = from_cheat + (1.0 - p_cheat) * p.l() * p.alpha();
  if (!(denom > 0)) {
    throw SignalImpossible(fmt::format(
        "alert s has probability 0 at p_cheat = {}", p_cheat));
  }
  return from_cheat / denom;
}

double MixedCheatProbability(const GameParams& p) {
  const double gap = p.w() - p.gamma() * p.f();
  if (p.top_rating() || !(p.alpha() > 0) || gap < -kClassifyEps) {
    throw RegimeMismatch(fmt::format(
        "mixed cheat probability needs alpha > 0 and w > gamma*f "
        "(alpha = {}, w - gamma*f = {})",
        p.alpha(), gap));
  }
  return Clamp01(CheatFormula(p));
}

double MixedBanProbability(const GameParams& p) {
  if (p.top_rating() || HonestyThreshold(p) - p.beta() < -kClassifyEps ||
      BanDenominator(p) <= 0) {
    throw RegimeMismatch(fmt::format(
        "mixed ban probability needs beta below l - alpha*l + r - r*l "
        "(beta = {}, threshold = {})",
        p.beta(), HonestyThreshold(p)));
  }
  return Clamp01(BanFormula(p));
}

Equilibrium SolveEquilibrium(const GameParams& p) {
  Equilibrium eq;
  eq.regime = ClassifyRegime(p);
  switch (eq.regime.kind) {
    case RegimeKind::kTrivialTopRating:
      eq.profile = {0.0, 0.0};
      break;
    case RegimeKind::kNoBanCheat:
      eq.profile = {1.0, 0.0};
      break;
    case RegimeKind::kBanCheat:
      eq.profile = {1.0, 1.0};
      break;
    case RegimeKind::kMixed:
      eq.profile = {MixedCheatProbability(p), MixedBanProbability(p)};
      break;
    case RegimeKind::kAlphaZeroPure:
      eq.profile = {eq.regime.cheats ? 1.0 : 0.0, 1.0};
      break;
    case RegimeKind::kBoundary:
      eq.profile = BoundaryProfile(p);
      eq.non_unique = true;
      break;
  }
  eq.posterior_cheat_given_s = PosteriorIfDefined(p, eq.profile.p_cheat);
  const PayoffPair eu = ExpectedPayoffs(p, eq.profile);
  eq.eu_app = eu.eu_app;
  eq.eu_platform = eu.eu_platform;
  return eq;
}

}  // namespace rankgame
