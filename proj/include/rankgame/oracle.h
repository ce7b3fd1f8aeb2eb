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

#ifndef RANKGAME_ORACLE_H_
#define RANKGAME_ORACLE_H_

#include <vector>

#include "rankgame/equilibrium.h"
#include "rankgame/params.h"

namespace rankgame {

// A leaf of the game tree with its path probability under a profile.
struct Leaf {
  double probability = 0.0;
  Outcome outcome;
};

// All seven leaves (three after cheating, four after honesty), including
// zero-probability ones, in a fixed order.
std::vector<Leaf> EnumerateLeaves(const GameParams& params,
                                  const StrategyProfile& profile);

// Sum of probability * LeafPayoffs over EnumerateLeaves. Independent of the
// closed form in ExpectedPayoffs.
PayoffPair EnumeratedPayoffs(const GameParams& params,
                             const StrategyProfile& profile);

struct VerificationReport {
  double regret_app = 0.0;
  double regret_platform_at_s = 0.0;
  double indiff_residual_app = 0.0;
  double indiff_residual_platform = 0.0;
  bool off_path = false;  // Pr(s) = 0; platform regret reported as 0
  bool passed = false;
};

inline constexpr double kDefaultVerifyTol = 1e-9;

// Largest gain from a unilateral pure deviation at each decision point. The
// platform is judged at "s observed" under the Bayes posterior, with keep
// worth gamma*f - w*post + v*(1-post) and ban worth 0.
VerificationReport BestResponseRegret(const GameParams& params,
                                      const StrategyProfile& profile,
                                      double tol = kDefaultVerifyTol);

// Regrets plus, for Mixed, both indifference residuals. Boundary results
// are checked for zero regret only.
VerificationReport VerifyEquilibrium(const GameParams& params,
                                     const Equilibrium& eq,
                                     double tol = kDefaultVerifyTol);

}  // namespace rankgame

#endif  // RANKGAME_ORACLE_H_
