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

#include "rankgame/curves.h"

#include <algorithm>
#include <charconv>
#include <vector>

#include <fmt/format.h>

namespace rankgame {
namespace {

std::vector<std::string_view> SplitColon(std::string_view text) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    const size_t pos = text.find(':', start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double ParseNumber(std::string_view s, std::string_view context) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw CurveError(fmt::format("bad number '{}' in curve '{}'", s, context));
  }
  return value;
}

}  // namespace

CurveFn CurveFn::Parse(std::string_view text) {
  const auto parts = SplitColon(text);
  if (parts[0] == "constant" && parts.size() == 2) {
    return Constant(ParseNumber(parts[1], text));
  }
  if (parts[0] == "affine" && parts.size() == 3) {
    return Affine(ParseNumber(parts[1], text), ParseNumber(parts[2], text));
  }
  throw CurveError(fmt::format(
      "unknown curve '{}' (expected constant:K or affine:A:B)", text));
}

std::string CurveFn::ToString() const {
  if (kind == Kind::kConstant) return fmt::format("constant:{}", a);
  return fmt::format("affine:{}:{}", a, b);
}

double CurveFn::operator()(double r) const {
  const double raw = kind == Kind::kConstant ? a : a + b * r;
  return std::clamp(raw, kCurveEps, 1.0 - kCurveEps);
}

void RatingCurves::Validate() const {
  if (l && !(l->kind == CurveFn::Kind::kAffine && l->b > 0)) {
    throw CurveError(fmt::format(
        "l curve must be strictly increasing in r, got {}", l->ToString()));
  }
  if (beta && beta->kind == CurveFn::Kind::kAffine && beta->b < 0) {
    throw CurveError(fmt::format(
        "beta curve must be weakly increasing in r, got {}", beta->ToString()));
  }
}

ParamValues RatingCurves::Apply(ParamValues base,
                                std::optional<Param> keep) const {
  auto apply = [&](const std::optional<CurveFn>& fn, Param p) {
    if (fn && keep != p) base.set(p, (*fn)(base.r));
  };
  apply(alpha, Param::kAlpha);
  apply(beta, Param::kBeta);
  apply(l, Param::kL);
  return base;
}

}  // namespace rankgame
