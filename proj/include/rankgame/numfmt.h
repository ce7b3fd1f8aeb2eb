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

#ifndef RANKGAME_NUMFMT_H_
#define RANKGAME_NUMFMT_H_

#include <string>

namespace rankgame {

// Nine significant digits, the precision of every number the tools print.
std::string FormatNumber(double x);

// x rounded to what FormatNumber prints.
double RoundToPrinted(double x);

}  // namespace rankgame

#endif  // RANKGAME_NUMFMT_H_
