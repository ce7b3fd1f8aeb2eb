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

#include <random>

#include "gtest/gtest.h"
#include "rankgame/analysis.h"
#include "rankgame/curves.h"
#include "rankgame/equilibrium.h"
#include "rankgame/game.h"
#include "test_support.h"

namespace rankgame {
namespace {

ParamValues Reference(double f = 0.5) {
  return {.gamma = 1, .r = 0.6, .f = f, .alpha = 0.1, .beta = 0.1, .l = 0.6,
          .v = 9, .w = 3};
}

GameParams P(const ParamValues& raw) { return ValidateAllowingTopRating(raw); }

TEST(ClassifyRegimeTest, Examples) {
  ParamValues low_w = Reference();
  low_w.w = 0.3;
  EXPECT_EQ(ClassifyRegime(P(low_w)).kind, RegimeKind::kNoBanCheat);
  // Part 1 wins even with a perfect alert or a high miss rate.
  low_w.alpha = 0.0;
  EXPECT_EQ(ClassifyRegime(P(low_w)).kind, RegimeKind::kNoBanCheat);
  low_w.alpha = 0.1;
  low_w.beta = 0.9;
  EXPECT_EQ(ClassifyRegime(P(low_w)).kind, RegimeKind::kNoBanCheat);

  EXPECT_NEAR(HonestyThreshold(P(Reference())), 0.78, 1e-15);
  EXPECT_EQ(ClassifyRegime(P(Reference())).kind, RegimeKind::kMixed);

  ParamValues high_beta = Reference();
  high_beta.beta = 0.9;
  EXPECT_EQ(ClassifyRegime(P(high_beta)).kind, RegimeKind::kBanCheat);

  ParamValues top = Reference();
  top.r = 1.0;
  EXPECT_EQ(ClassifyRegime(P(top)).kind, RegimeKind::kTrivialTopRating);
}

TEST(ClassifyRegimeTest, BoundariesAndAlphaZero) {
  ParamValues eq_w = Reference();
  eq_w.w = 0.5;  // w = gamma*f
  EXPECT_EQ(ClassifyRegime(P(eq_w)).kind, RegimeKind::kBoundary);
  eq_w.w = 0.5 + 5e-13;
  EXPECT_EQ(ClassifyRegime(P(eq_w)).kind, RegimeKind::kBoundary);
  eq_w.w = 0.5 + 1e-9;
  EXPECT_EQ(ClassifyRegime(P(eq_w)).kind, RegimeKind::kMixed);

  ParamValues eq_beta = Reference();
  eq_beta.beta = HonestyThreshold(P(Reference()));
  EXPECT_EQ(ClassifyRegime(P(eq_beta)).kind, RegimeKind::kBoundary);

  ParamValues a0 = Reference();
  a0.alpha = 0.0;
  EXPECT_EQ(ClassifyRegime(P(a0)), (Regime{RegimeKind::kAlphaZeroPure, false}));
  a0.beta = 0.9;  // above l + r(1-l) = 0.84
  EXPECT_EQ(ClassifyRegime(P(a0)), (Regime{RegimeKind::kAlphaZeroPure, true}));
  a0.beta = 0.84;  // tie goes to honesty
  a0.beta = HonestyThreshold(P(a0));
  EXPECT_EQ(ClassifyRegime(P(a0)), (Regime{RegimeKind::kAlphaZeroPure, false}));
}

TEST(RegimeNameTest, RoundTrips) {
  for (auto kind : {RegimeKind::kNoBanCheat, RegimeKind::kBanCheat,
                    RegimeKind::kMixed, RegimeKind::kBoundary,
                    RegimeKind::kTrivialTopRating, RegimeKind::kAlphaZeroPure}) {
    for (bool cheats : {false, true}) {
      if (kind != RegimeKind::kAlphaZeroPure && cheats) continue;
      const Regime r{kind, cheats};
      EXPECT_EQ(ParseRegime(RegimeName(r)), r);
    }
  }
  EXPECT_FALSE(ParseRegime("Pooling"));
}

TEST(PosteriorTest, Examples) {
  const GameParams p = P(Reference());
  EXPECT_EQ(PosteriorCheatGivenSignal(p, 0.0), 0.0);
  EXPECT_EQ(PosteriorCheatGivenSignal(p, 1.0), 1.0);
  EXPECT_NEAR(PosteriorCheatGivenSignal(p, 0.5), 0.9375, 1e-15);

  ParamValues a0 = Reference();
  a0.alpha = 0.0;
  EXPECT_THROW(PosteriorCheatGivenSignal(P(a0), 0.0), SignalImpossible);
}

TEST(PosteriorTest, MatchesJointProbabilities) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const ParamValues raw = testing::DrawMixed(rng);
    const double pc = testing::Uniform(rng, 0, 1);
    EXPECT_NEAR(PosteriorCheatGivenSignal(P(raw), pc),
                testing::BruteForcePosterior(raw, pc), 1e-14);
  }
}

TEST(MixedCheatProbabilityTest, Examples) {
  EXPECT_NEAR(MixedCheatProbability(P(Reference())), 0.57 / 2.82, 1e-15);

  const ParamValues symmetric{.gamma = 1, .r = 0.5, .f = 0, .alpha = 0.1,
                              .beta = 0.1, .l = 0.5, .v = 9, .w = 0.5};
  EXPECT_NEAR(MixedCheatProbability(P(symmetric)), 0.5, 1e-15);

  ParamValues corner = Reference(1.0);
  corner.w = 4;
  EXPECT_NEAR(MixedCheatProbability(P(corner)), 0.6 / 3.3, 1e-15);
  EXPECT_NEAR(MixedCheatProbability(P(corner)), 0.181818181818, 1e-12);
}

TEST(MixedCheatProbabilityTest, RegimeMismatch) {
  ParamValues low_w = Reference();
  low_w.w = 0.3;
  EXPECT_THROW(MixedCheatProbability(P(low_w)), RegimeMismatch);
  ParamValues a0 = Reference();
  a0.alpha = 0;
  EXPECT_THROW(MixedCheatProbability(P(a0)), RegimeMismatch);
}

TEST(MixedBanProbabilityTest, Examples) {
  EXPECT_NEAR(MixedBanProbability(P(Reference())), 0.16 / 0.84, 1e-15);
  EXPECT_NEAR(MixedBanProbability(P(Reference())), 0.190476190476, 1e-12);

  const ParamValues other{.gamma = 1, .r = 0.5, .f = 0.5, .alpha = 0.1,
                          .beta = 0.0, .l = 0.5, .v = 9, .w = 3};
  EXPECT_NEAR(MixedBanProbability(P(other)), 0.25 / 0.95, 1e-15);

  ParamValues edge = Reference();
  edge.beta = HonestyThreshold(P(Reference()));  // (1-r)(1-l) = 1 - beta - alpha*l
  EXPECT_NEAR(MixedBanProbability(P(edge)), 1.0, 1e-12);

  ParamValues high_beta = Reference();
  high_beta.beta = 0.9;
  EXPECT_THROW(MixedBanProbability(P(high_beta)), RegimeMismatch);
}

TEST(SolveEquilibriumTest, ReferenceMixed) {
  const Equilibrium eq = SolveEquilibrium(P(Reference()));
  EXPECT_EQ(eq.regime.kind, RegimeKind::kMixed);
  EXPECT_FALSE(eq.non_unique);
  EXPECT_NEAR(eq.profile.p_cheat, 0.202127659574, 1e-12);
  EXPECT_NEAR(eq.profile.p_ban_given_s, 0.190476190476, 1e-12);
  ASSERT_TRUE(eq.posterior_cheat_given_s);
  EXPECT_NEAR(*eq.posterior_cheat_given_s, 9.5 / 12.0, 1e-14);
  const PayoffPair x = ExpectedPayoffs(P(Reference()), eq.profile);
  EXPECT_EQ(eq.eu_app, x.eu_app);
  EXPECT_EQ(eq.eu_platform, x.eu_platform);
}

TEST(SolveEquilibriumTest, PureRegimes) {
  ParamValues low_w = Reference();
  low_w.w = 0.3;
  const Equilibrium nb = SolveEquilibrium(P(low_w));
  EXPECT_EQ(nb.regime.kind, RegimeKind::kNoBanCheat);
  EXPECT_EQ(nb.profile.p_cheat, 1.0);
  EXPECT_EQ(nb.profile.p_ban_given_s, 0.0);
  EXPECT_NEAR(nb.eu_platform, 0.2, 1e-15);

  ParamValues high_beta = Reference();
  high_beta.beta = 0.9;
  const Equilibrium bc = SolveEquilibrium(P(high_beta));
  EXPECT_EQ(bc.regime.kind, RegimeKind::kBanCheat);
  EXPECT_EQ(bc.profile.p_cheat, 1.0);
  EXPECT_EQ(bc.profile.p_ban_given_s, 1.0);
  EXPECT_EQ(bc.posterior_cheat_given_s, 1.0);

  ParamValues top = Reference();
  top.r = 1.0;
  const Equilibrium tr = SolveEquilibrium(P(top));
  EXPECT_EQ(tr.regime.kind, RegimeKind::kTrivialTopRating);
  EXPECT_EQ(tr.profile.p_cheat, 0.0);
  EXPECT_EQ(tr.profile.p_ban_given_s, 0.0);

  ParamValues a0 = Reference();
  a0.alpha = 0.0;
  const Equilibrium az = SolveEquilibrium(P(a0));
  EXPECT_EQ(az.regime, (Regime{RegimeKind::kAlphaZeroPure, false}));
  EXPECT_EQ(az.profile.p_cheat, 0.0);
  EXPECT_EQ(az.profile.p_ban_given_s, 1.0);
  EXPECT_FALSE(az.posterior_cheat_given_s);  // s never happens
}

TEST(SolveEquilibriumTest, BoundaryIsFlagged) {
  ParamValues eq_w = Reference();
  eq_w.w = 0.5;
  const Equilibrium b = SolveEquilibrium(P(eq_w));
  EXPECT_EQ(b.regime.kind, RegimeKind::kBoundary);
  EXPECT_TRUE(b.non_unique);
  EXPECT_EQ(b.profile.p_cheat, 1.0);  // mixed cheat formula at w = gamma*f
  EXPECT_NEAR(b.profile.p_ban_given_s, 0.16 / 0.84, 1e-15);
}

TEST(SolveEquilibriumTest, MixedInvariants) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 1000; ++i) {
    const ParamValues raw = testing::DrawMixed(rng);
    const GameParams p = P(raw);
    const Equilibrium eq = SolveEquilibrium(p);
    ASSERT_EQ(eq.regime.kind, RegimeKind::kMixed);
    EXPECT_GT(eq.profile.p_cheat, 0.0);
    EXPECT_LT(eq.profile.p_cheat, 1.0);
    EXPECT_GT(eq.profile.p_ban_given_s, 0.0);
    EXPECT_LT(eq.profile.p_ban_given_s, 1.0);

    // Platform indifferent at s.
    const double post = PosteriorCheatGivenSignal(p, eq.profile.p_cheat);
    const double gf = p.gamma() * p.f();
    EXPECT_LE(std::abs(gf - p.w() * post + p.v() * (1 - post)), 1e-12);
    EXPECT_NEAR(post, (gf + p.v()) / (p.w() + p.v()), 1e-12);

    // App indifferent between c and c-hat.
    const double pb = eq.profile.p_ban_given_s;
    EXPECT_LE(std::abs(ExpectedPayoffs(p, {1, pb}).eu_app -
                       ExpectedPayoffs(p, {0, pb}).eu_app),
              1e-12);

    // P_b ignores f, gamma, v and w exactly.
    for (Param q : {Param::kF, Param::kGamma, Param::kV, Param::kW}) {
      ParamValues moved = raw;
      moved.set(q, raw.get(q) * 1.0001);
      const GameParams pm = P(moved);
      if (ClassifyRegime(pm).kind != RegimeKind::kMixed) continue;
      EXPECT_EQ(MixedBanProbability(pm), pb);
    }

    // Scaling (gamma, v, w) by a power of two changes nothing.
    ParamValues scaled = raw;
    scaled.gamma *= 8;
    scaled.v *= 8;
    scaled.w *= 8;
    const Equilibrium es = SolveEquilibrium(P(scaled));
    EXPECT_EQ(es.regime, eq.regime);
    EXPECT_EQ(es.profile.p_cheat, eq.profile.p_cheat);
    EXPECT_EQ(es.profile.p_ban_given_s, eq.profile.p_ban_given_s);
    EXPECT_EQ(es.posterior_cheat_given_s, eq.posterior_cheat_given_s);
  }
}

TEST(SolveEquilibriumTest, ScaleInvarianceArbitraryKappa) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 500; ++i) {
    const ParamValues raw = testing::DrawMixed(rng);
    const double kappa = testing::Uniform(rng, 0.1, 10);
    ParamValues scaled = raw;
    scaled.gamma *= kappa;
    scaled.v *= kappa;
    scaled.w *= kappa;
    const Equilibrium a = SolveEquilibrium(P(raw));
    const Equilibrium b = SolveEquilibrium(P(scaled));
    EXPECT_EQ(a.regime, b.regime);
    EXPECT_NEAR(a.profile.p_cheat, b.profile.p_cheat, 1e-13);
    EXPECT_EQ(a.profile.p_ban_given_s, b.profile.p_ban_given_s);
    EXPECT_NEAR(*a.posterior_cheat_given_s, *b.posterior_cheat_given_s, 1e-13);
  }
}

TEST(ComparativeStaticsTest, CheatAndBanSigns) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    const GameParams p = P(testing::DrawMixed(rng));
    EXPECT_GT(ComparativeStatic(p, Target::kCheat, Param::kF), 0);
    EXPECT_GT(ComparativeStatic(p, Target::kCheat, Param::kV), 0);
    EXPECT_GT(ComparativeStatic(p, Target::kCheat, Param::kAlpha), 0);
    EXPECT_GT(ComparativeStatic(p, Target::kCheat, Param::kBeta), 0);
    EXPECT_LT(ComparativeStatic(p, Target::kCheat, Param::kW), 0);
    EXPECT_GT(ComparativeStatic(p, Target::kBan, Param::kAlpha), 0);
    EXPECT_GT(ComparativeStatic(p, Target::kBan, Param::kBeta), 0);
    EXPECT_EQ(ComparativeStatic(p, Target::kBan, Param::kF), 0.0);
  }
}

TEST(ComparativeStaticsTest, CheatingRisesWithRating) {
  // Constant alpha and beta, strictly increasing l(r).
  RatingCurves curves;
  curves.alpha = CurveFn::Constant(0.1);
  curves.beta = CurveFn::Constant(0.1);
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    curves.l = CurveFn::Affine(testing::Uniform(rng, 0.0, 0.3),
                               testing::Uniform(rng, 0.1, 0.7));
    const SweepBase base{Reference(testing::Uniform(rng, 0.0, 1.0)), curves};
    const double h = 1e-6;
    for (double r = 0.05; r < 0.95; r += 0.05) {
      const GameParams lo = ParamsAt(base, Param::kR, r - h);
      const GameParams hi = ParamsAt(base, Param::kR, r + h);
      if (ClassifyRegime(lo).kind != RegimeKind::kMixed ||
          ClassifyRegime(hi).kind != RegimeKind::kMixed) {
        continue;
      }
      EXPECT_GT(MixedCheatProbability(hi), MixedCheatProbability(lo))
          << "r = " << r << " l = " << curves.l->ToString();
    }
  }
}

}  // namespace
}  // namespace rankgame
