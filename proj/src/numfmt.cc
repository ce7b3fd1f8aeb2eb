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

#include "rankgame/numfmt.h"

#include <cstdlib>

#include <fmt/format.h>

namespace rankgame {

std::string FormatNumber(double x) { return fmt::format("{:.9g}", x); }

double RoundToPrinted(double x) {
  return std::strtod(FormatNumber(x).c_str(), nullptr);
}

}  // namespace rankgame
