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

#ifndef RANKGAME_CONFIG_H_
#define RANKGAME_CONFIG_H_

#include <map>
#include <string>
#include <string_view>

#include "rankgame/curves.h"
#include "rankgame/params.h"

namespace rankgame {

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Parsed model block: scalars that were given, plus rating curves.
//
//   # reference setting
//   gamma = 1
//   r = 0.6
//   [curves]
//   l = "affine:0.0:1.0"
//
// An optional [equilibrium] section (written by `solve --out`) is kept as
// raw key/value text for the verify command.
struct ModelConfig {
  std::map<Param, double> scalars;
  RatingCurves curves;
  std::map<std::string, std::string> equilibrium;
};

ModelConfig ParseConfig(std::string_view text);
ModelConfig LoadConfigFile(const std::string& path);

// Applies one "key=value" override (scalar parameter names only).
void ApplyOverride(ModelConfig& config, std::string_view assignment);

// Builds the raw values, throwing ConfigError naming the first parameter
// that is neither set nor supplied by a curve nor listed in `optional`.
ParamValues ResolveValues(const ModelConfig& config,
                          std::initializer_list<Param> optional = {});

}  // namespace rankgame

#endif  // RANKGAME_CONFIG_H_
