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

#ifndef RANKGAME_SVG_H_
#define RANKGAME_SVG_H_

#include <string>
#include <vector>

namespace rankgame {

struct ChartSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;  // non-finite points are skipped
};

// Self-contained 800x600 line chart: axes with ticks, one polyline per
// series, legend. No scripts, fonts or external references.
std::string RenderLineChart(const std::string& title, const std::string& x_label,
                            const std::vector<ChartSeries>& series);

}  // namespace rankgame

#endif  // RANKGAME_SVG_H_
