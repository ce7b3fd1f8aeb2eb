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

#include "rankgame/oracle.h"

#include <algorithm>
#include <cmath>

#include "rankgame/game.h"

namespace rankgame {

std::vector<Leaf> EnumerateLeaves(const GameParams& p,
                                  const StrategyProfile& profile) {
  const double pc = profile.p_cheat;
  const double pb = profile.p_ban_given_s;
  const double a = p.alpha();
  const double b = p.beta();
  const double l = p.l();
  const Outcome cheat_banned{true, 0.0, Signal::kS, true};
  const Outcome cheat_kept_s{true, 1.0, Signal::kS, false};
  const Outcome cheat_missed{true, 1.0, Signal::kNotS, false};
  const Outcome honest_banned{false, 0.0, Signal::kS, true};
  const Outcome honest_kept_s{false, 1.0, Signal::kS, false};
  const Outcome honest_top{false, 1.0, Signal::kNotS, false};
  const Outcome honest_stays{false, p.r(), Signal::kNotS, false};
  return {
      {pc * (1 - b) * pb, cheat_banned},
      {pc * (1 - b) * (1 - pb), cheat_kept_s},
      {pc * b, cheat_missed},
      {(1 - pc) * l * a * pb, honest_banned},
      {(1 - pc) * l * a * (1 - pb), honest_kept_s},
      {(1 - pc) * l * (1 - a), honest_top},
      {(1 - pc) * (1 - l), honest_stays},
  };
}

PayoffPair EnumeratedPayoffs(const GameParams& params,
                             const StrategyProfile& profile) {
  PayoffPair total;
  for (const Leaf& leaf : EnumerateLeaves(params, profile)) {
    const PayoffPair x = LeafPayoffs(params, leaf.outcome);
    total.eu_app += leaf.probability * x.eu_app;
    total.eu_platform += leaf.probability * x.eu_platform;
  }
  return total;
}

VerificationReport BestResponseRegret(const GameParams& p,
                                      const StrategyProfile& profile,
                                      double tol) {
  VerificationReport report;

  const double pb = profile.p_ban_given_s;
  const double app_now = EnumeratedPayoffs(p, profile).eu_app;
  const double app_cheat = EnumeratedPayoffs(p, {1.0, pb}).eu_app;
  const double app_honest = EnumeratedPayoffs(p, {0.0, pb}).eu_app;
  report.regret_app = std::max(0.0, std::max(app_cheat, app_honest) - app_now);

  // Belief at s straight from the tree, not from the Bayes formula.
  double pr_s = 0.0;
  double pr_s_cheat = 0.0;
  for (const Leaf& leaf :
       EnumerateLeaves(p, {profile.p_cheat, 0.0})) {
    if (leaf.outcome.signal != Signal::kS) continue;
    pr_s += leaf.probability;
    if (leaf.outcome.cheated) pr_s_cheat += leaf.probability;
  }
  if (pr_s > 0) {
    const double post = pr_s_cheat / pr_s;
    const double keep = p.gamma() * p.f() - p.w() * post + p.v() * (1.0 - post);
    const double now = (1.0 - pb) * keep;
    report.regret_platform_at_s = std::max(0.0, std::max(keep, 0.0) - now);
  } else {
    report.off_path = true;
  }

  report.passed = report.regret_app <= tol && report.regret_platform_at_s <= tol;
  return report;
}

VerificationReport VerifyEquilibrium(const GameParams& p, const Equilibrium& eq,
                                     double tol) {
  VerificationReport report = BestResponseRegret(p, eq.profile, tol);
  if (eq.regime.kind == RegimeKind::kMixed) {
    const double pb = eq.profile.p_ban_given_s;
    report.indiff_residual_app = EnumeratedPayoffs(p, {1.0, pb}).eu_app -
                                 EnumeratedPayoffs(p, {0.0, pb}).eu_app;
    try {
      const double post = PosteriorCheatGivenSignal(p, eq.profile.p_cheat);
      report.indiff_residual_platform =
          p.gamma() * p.f() - p.w() * post + p.v() * (1.0 - post);
    } catch (const SignalImpossible&) {
      report.indiff_residual_platform = INFINITY;
    }
    report.passed = report.passed &&
                    std::abs(report.indiff_residual_app) <= tol &&
                    std::abs(report.indiff_residual_platform) <= tol;
  }
  return report;
}

}  // namespace rankgame
