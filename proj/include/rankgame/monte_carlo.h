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

#ifndef RANKGAME_MONTE_CARLO_H_
#define RANKGAME_MONTE_CARLO_H_

#include <cstdint>

#include "rankgame/params.h"

namespace rankgame {

// Plays are grouped into shards of this size. Shard k draws from its own
// std::mt19937_64 seeded with ShardSeed(seed, k), so results depend only on
// (seed, n) and never on the thread count.
inline constexpr int64_t kShardSize = 1 << 16;

// SplitMix64 finaliser.
uint64_t SplitMix64(uint64_t x);
uint64_t ShardSeed(uint64_t seed, uint64_t shard);

struct McEstimate {
  double mean_app = 0.0;
  double mean_platform = 0.0;
  double std_err_app = 0.0;       // sample std / sqrt(n)
  double std_err_platform = 0.0;
  int64_t n = 0;
  uint64_t seed = 0;

  friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

class McError : public Error {
 public:
  using Error::Error;
};

// Simulates n independent plays of the game under profile. Leaf visits are
// counted exactly, so the OpenMP kernel and the serial reference return
// bit-identical estimates.
McEstimate MonteCarloPayoffs(const GameParams& params,
                             const StrategyProfile& profile, int64_t n,
                             uint64_t seed);
McEstimate MonteCarloPayoffsSerial(const GameParams& params,
                                   const StrategyProfile& profile, int64_t n,
                                   uint64_t seed);

}  // namespace rankgame

#endif  // RANKGAME_MONTE_CARLO_H_
