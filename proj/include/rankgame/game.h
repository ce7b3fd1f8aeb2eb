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

#ifndef RANKGAME_GAME_H_
#define RANKGAME_GAME_H_

#include "rankgame/params.h"

namespace rankgame {

// Checks the structural constraints of an Outcome against params: an alert
// needs pre-ban rating 1, a ban needs an alert and zeroes the rating, and
// cheating always reaches rating 1.
bool OutcomeValid(const GameParams& params, const Outcome& outcome);

// Payoffs at a leaf of the game tree. A ban zeroes both payoffs; otherwise
// the app keeps gamma*r2*(1-f) and the platform earns gamma*r2*f minus w
// (cheater kept) or plus v (honest app kept).
PayoffPair LeafPayoffs(const GameParams& params, const Outcome& outcome);

// Exact expectation over the cheat mix, the honest rating lottery, the alert
// noise and the ban mix, in closed form.
PayoffPair ExpectedPayoffs(const GameParams& params,
                           const StrategyProfile& profile);

}  // namespace rankgame

#endif  // RANKGAME_GAME_H_
