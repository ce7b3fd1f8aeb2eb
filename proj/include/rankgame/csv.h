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

#ifndef RANKGAME_CSV_H_
#define RANKGAME_CSV_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rankgame/analysis.h"

namespace rankgame {

// Exact header of sweep and solve tables.
inline constexpr std::string_view kSweepHeader =
    "axis,value,P_c,P_b,posterior,eu_app,eu_platform,regime";

// A sweep table row as read back from disk. Numbers are NaN where the
// writer printed "nan" (invalid rows, undefined posterior).
struct CsvRow {
  std::string axis;
  double value = 0.0;
  double p_cheat = 0.0;
  double p_ban = 0.0;
  double posterior = 0.0;
  double eu_app = 0.0;
  double eu_platform = 0.0;
  std::string regime;  // "invalid" for rows that failed validation
};

void WriteSweepCsv(std::ostream& out, const std::vector<SweepRow>& rows);
std::vector<CsvRow> ReadSweepCsv(std::istream& in);

// axis,value,f_star,eu_star,regime,refined
void WriteFeeCsv(std::ostream& out, const std::vector<FeeSweepRow>& rows);

}  // namespace rankgame

#endif  // RANKGAME_CSV_H_
