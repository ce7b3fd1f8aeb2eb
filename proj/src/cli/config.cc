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

#include "rankgame/config.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace rankgame {
namespace {

std::string_view Trim(std::string_view s) {
  const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r'; };
  while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string_view Unquote(std::string_view s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

double ParseScalar(std::string_view key, std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(fmt::format("{}: '{}' is not a number", key, text));
  }
  return value;
}

Param ScalarKey(std::string_view key) {
  const auto p = ParseParam(key);
  if (!p) throw ConfigError(fmt::format("unknown parameter '{}'", key));
  return *p;
}

}  // namespace

ModelConfig ParseConfig(std::string_view text) {
  ModelConfig config;
  std::string section;
  int line_no = 0;
  while (!text.empty()) {
    const size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError(fmt::format("line {}: unterminated section", line_no));
      }
      section = std::string(Trim(line.substr(1, line.size() - 2)));
      if (section != "curves" && section != "equilibrium") {
        throw ConfigError(
            fmt::format("line {}: unknown section [{}]", line_no, section));
      }
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(fmt::format("line {}: expected key = value", line_no));
    }
    const std::string_view key = Trim(line.substr(0, eq));
    const std::string_view value = Unquote(Trim(line.substr(eq + 1)));
    if (section.empty()) {
      config.scalars[ScalarKey(key)] = ParseScalar(key, value);
      continue;
    }
    if (section == "equilibrium") {
      config.equilibrium[std::string(key)] = std::string(value);
      continue;
    }
    try {
      const CurveFn fn = CurveFn::Parse(value);
      if (key == "alpha") config.curves.alpha = fn;
      else if (key == "beta") config.curves.beta = fn;
      else if (key == "l") config.curves.l = fn;
      else throw ConfigError(fmt::format("unknown curve '{}'", key));
    } catch (const CurveError& e) {
      throw ConfigError(fmt::format("line {}: {}", line_no, e.what()));
    }
  }
  return config;
}

ModelConfig LoadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot read config '{}'", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return ParseConfig(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(fmt::format("{}: {}", path, e.what()));
  }
}

void ApplyOverride(ModelConfig& config, std::string_view assignment) {
  const size_t eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError(
        fmt::format("--set expects key=value, got '{}'", assignment));
  }
  const std::string_view key = Trim(assignment.substr(0, eq));
  const Param p = ScalarKey(key);
  config.scalars[p] = ParseScalar(key, Trim(assignment.substr(eq + 1)));
  // An explicit scalar replaces any curve for the same field.
  if (p == Param::kAlpha) config.curves.alpha.reset();
  if (p == Param::kBeta) config.curves.beta.reset();
  if (p == Param::kL) config.curves.l.reset();
}

ParamValues ResolveValues(const ModelConfig& config,
                          std::initializer_list<Param> optional) {
  ParamValues raw;
  for (Param p : kAllParams) {
    if (auto it = config.scalars.find(p); it != config.scalars.end()) {
      raw.set(p, it->second);
      continue;
    }
    const bool from_curve = (p == Param::kAlpha && config.curves.alpha) ||
                            (p == Param::kBeta && config.curves.beta) ||
                            (p == Param::kL && config.curves.l);
    const bool skippable =
        std::find(optional.begin(), optional.end(), p) != optional.end();
    if (!from_curve && !skippable) {
      throw ConfigError(fmt::format("missing parameter '{}'", ParamName(p)));
    }
  }
  return raw;
}

}  // namespace rankgame
