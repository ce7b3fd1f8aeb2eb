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

#include "rankgame/monte_carlo.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "rankgame/game.h"
#include "rankgame/omp.h"

namespace rankgame {
namespace {

// Leaf order matches EnumerateLeaves.
enum LeafIndex {
  kCheatBanned,
  kCheatKeptS,
  kCheatMissed,
  kHonestBanned,
  kHonestKeptS,
  kHonestTop,
  kHonestStays,
  kNumLeaves
};

using Counts = std::array<int64_t, kNumLeaves>;

double Uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

Counts SimulateShard(const GameParams& p, const StrategyProfile& profile,
                     uint64_t seed, int64_t shard, int64_t plays) {
  std::mt19937_64 gen(ShardSeed(seed, static_cast<uint64_t>(shard)));
  Counts counts{};
  const double pc = profile.p_cheat;
  const double pb = profile.p_ban_given_s;
  const double alert_if_cheat = 1.0 - p.beta();
  for (int64_t i = 0; i < plays; ++i) {
    if (Uniform(gen) < pc) {
      if (Uniform(gen) < alert_if_cheat) {
        ++counts[Uniform(gen) < pb ? kCheatBanned : kCheatKeptS];
      } else {
        ++counts[kCheatMissed];
      }
    } else if (Uniform(gen) < p.l()) {
      if (Uniform(gen) < p.alpha()) {
        ++counts[Uniform(gen) < pb ? kHonestBanned : kHonestKeptS];
      } else {
        ++counts[kHonestTop];
      }
    } else {
      ++counts[kHonestStays];
    }
  }
  return counts;
}

// Leaves with equal payoffs are merged first, so a degenerate lottery
// reproduces its single payoff exactly with zero spread.
std::pair<double, double> MeanAndStdErr(
    const std::array<double, kNumLeaves>& value, const Counts& counts,
    int64_t n) {
  std::vector<std::pair<double, int64_t>> groups;
  for (int k = 0; k < kNumLeaves; ++k) {
    if (counts[k] == 0) continue;
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == value[k]; });
    if (it == groups.end()) {
      groups.emplace_back(value[k], counts[k]);
    } else {
      it->second += counts[k];
    }
  }
  const double dn = static_cast<double>(n);
  double mean = 0.0;
  for (const auto& [x, c] : groups) mean += static_cast<double>(c) / dn * x;
  if (n < 2) return {mean, 0.0};
  double ss = 0.0;
  for (const auto& [x, c] : groups) {
    const double d = x - mean;
    ss += static_cast<double>(c) * d * d;
  }
  return {mean, std::sqrt(ss / (dn - 1.0) / dn)};
}

McEstimate Summarise(const GameParams& p, const Counts& counts, int64_t n,
                     uint64_t seed) {
  static constexpr std::array<Outcome, kNumLeaves> kTemplate = {{
      {true, 0.0, Signal::kS, true},
      {true, 1.0, Signal::kS, false},
      {true, 1.0, Signal::kNotS, false},
      {false, 0.0, Signal::kS, true},
      {false, 1.0, Signal::kS, false},
      {false, 1.0, Signal::kNotS, false},
      {false, -1.0, Signal::kNotS, false},  // rating r, filled below
  }};
  std::array<PayoffPair, kNumLeaves> payoff;
  for (int k = 0; k < kNumLeaves; ++k) {
    Outcome o = kTemplate[k];
    if (k == kHonestStays) o.rating_final = p.r();
    payoff[k] = LeafPayoffs(p, o);
  }

  McEstimate est;
  est.n = n;
  est.seed = seed;
  std::array<double, kNumLeaves> app;
  std::array<double, kNumLeaves> plat;
  for (int k = 0; k < kNumLeaves; ++k) {
    app[k] = payoff[k].eu_app;
    plat[k] = payoff[k].eu_platform;
  }
  std::tie(est.mean_app, est.std_err_app) = MeanAndStdErr(app, counts, n);
  std::tie(est.mean_platform, est.std_err_platform) =
      MeanAndStdErr(plat, counts, n);
  return est;
}

void CheckInputs(const StrategyProfile& profile, int64_t n) {
  if (n < 1) throw McError(fmt::format("need n >= 1 plays, got {}", n));
  if (!profile.valid()) {
    throw McError(fmt::format("invalid profile ({}, {})", profile.p_cheat,
                              profile.p_ban_given_s));
  }
}

int64_t NumShards(int64_t n) { return (n + kShardSize - 1) / kShardSize; }

int64_t ShardPlays(int64_t n, int64_t shard) {
  return std::min(kShardSize, n - shard * kShardSize);
}

}  // namespace

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t ShardSeed(uint64_t seed, uint64_t shard) {
  return SplitMix64(SplitMix64(seed) ^ shard);
}

McEstimate MonteCarloPayoffsSerial(const GameParams& params,
                                   const StrategyProfile& profile, int64_t n,
                                   uint64_t seed) {
  CheckInputs(profile, n);
  Counts total{};
  for (int64_t s = 0; s < NumShards(n); ++s) {
    const Counts c = SimulateShard(params, profile, seed, s, ShardPlays(n, s));
    for (int k = 0; k < kNumLeaves; ++k) total[k] += c[k];
  }
  return Summarise(params, total, n, seed);
}

McEstimate MonteCarloPayoffs(const GameParams& params,
                             const StrategyProfile& profile, int64_t n,
                             uint64_t seed) {
  CheckInputs(profile, n);
  const int64_t shards = NumShards(n);
  std::vector<Counts> per_shard(shards);
#pragma omp parallel for schedule(static)
  for (int64_t s = 0; s < shards; ++s) {
    per_shard[s] = SimulateShard(params, profile, seed, s, ShardPlays(n, s));
  }
  Counts total{};
  for (const Counts& c : per_shard) {
    for (int k = 0; k < kNumLeaves; ++k) total[k] += c[k];
  }
  return Summarise(params, total, n, seed);
}

}  // namespace rankgame
