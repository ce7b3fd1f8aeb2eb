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

#ifndef RANKGAME_ANALYSIS_H_
#define RANKGAME_ANALYSIS_H_

#include <optional>
#include <string>
#include <vector>

#include "rankgame/curves.h"
#include "rankgame/equilibrium.h"
#include "rankgame/params.h"

namespace rankgame {

// Platform's expected utility in equilibrium:
//   NoBanCheat        gamma*f - w
//   BanCheat          beta*(gamma*f - w)
//   Mixed, Boundary   (1-Pc)*(gamma*f*((1-l)*r + l) + v) + Pc*(gamma*f - w)
//   TrivialTopRating  gamma*f + v
//   AlphaZeroPure     expected payoff at the pure profile
double PlatformEquilibriumUtility(const GameParams& params);

// The same closed forms, but for a regime chosen by the caller instead of
// the one params classify into. Used to evaluate one-sided limits at a
// regime switch.
double PlatformUtilityInRegime(const GameParams& params, const Regime& regime);

struct FeeGrid {
  double step = 1e-3;        // must lie in (0, 0.1]
  int refine_iterations = 64;
};

struct FeeOptimum {
  double f_star = 0.0;
  double eu_star = 0.0;
  Regime regime_at_star;
  double grid_resolution = 0.0;
  bool refined = false;  // golden-section step improved on the grid
};

// Maximises PlatformEquilibriumUtility over f in [0, 1]. The incoming f is
// ignored. Ties go to the smallest f.
FeeOptimum OptimizeFee(const ParamValues& params_sans_f, FeeGrid grid = {});

enum class Target { kCheat, kBan, kPlatformUtility };

std::string_view TargetName(Target t);

// Central difference (value(x+h) - value(x-h)) / 2h of a Mixed-regime
// quantity. Throws RegimeMismatch if params, or either shifted point, leave
// the Mixed regime.
double ComparativeStatic(const GameParams& params, Target target, Param wrt,
                         double h = 1e-6);

// Values to visit along one parameter.
struct SweepAxis {
  Param param = Param::kF;
  std::vector<double> values;

  // `steps` evenly spaced points from lo to hi inclusive, each rounded to
  // nine significant digits so they print and re-parse exactly.
  static SweepAxis Linspace(Param param, double lo, double hi, int steps);
  // "name:lo:hi:steps" or "name=v1,v2,...".
  static SweepAxis Parse(std::string_view text);
};

// Fixed scalars plus optional rating curves evaluated at each row's r.
struct SweepBase {
  ParamValues scalars;
  RatingCurves curves;
};

struct SweepRow {
  Param axis = Param::kF;
  double value = 0.0;
  bool ok = false;
  std::string error;  // set when !ok
  double p_cheat = 0.0;
  double p_ban = 0.0;
  std::optional<double> posterior;
  double eu_app = 0.0;
  double eu_platform = 0.0;
  Regime regime;
};

// Parameters at one axis point: axis value applied, then the curves, then
// validation (r = 1 takes the top-rating path).
GameParams ParamsAt(const SweepBase& base, Param axis, double value);

// One row per axis value, sorted by value. Invalid points keep a row with
// ok = false. SweepSerial is the single-threaded reference; Sweep splits
// the rows across OpenMP threads and returns identical output.
std::vector<SweepRow> Sweep(const SweepBase& base, const SweepAxis& axis);
std::vector<SweepRow> SweepSerial(const SweepBase& base, const SweepAxis& axis);

struct FeeSweepRow {
  Param axis = Param::kBeta;
  double value = 0.0;
  bool ok = false;
  std::string error;
  FeeOptimum optimum;
};

// OptimizeFee at every axis point (the axis must not be f).
std::vector<FeeSweepRow> OptimizeFeeSweep(const SweepBase& base,
                                          const SweepAxis& axis,
                                          FeeGrid grid = {});

}  // namespace rankgame

#endif  // RANKGAME_ANALYSIS_H_
