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

#include "rankgame/params.h"

#include <cmath>

#include <fmt/format.h>

namespace rankgame {
namespace {

std::string DescribeViolations(const std::vector<Violation>& vs) {
  std::string out = "invalid parameters:";
  for (const auto& v : vs) {
    if (v.kind == Violation::Kind::kTopRating) {
      out += fmt::format(" r = {} (top rating, requires the trivial regime path);",
                         v.value);
    } else {
      out += fmt::format(" {} = {} violates {};", ParamName(v.field), v.value,
                         v.bound);
    }
  }
  out.pop_back();
  return out;
}

// Every bound except the one on r.
void CheckNonRating(const ParamValues& p, std::vector<Violation>& out) {
  auto add = [&](bool ok, Param field, const char* bound) {
    if (!ok) {
      out.push_back({Violation::Kind::kOutOfRange, field, p.get(field), bound});
    }
  };
  // Written as positive conditions so NaN fails every check.
  add(p.gamma > 0 && std::isfinite(p.gamma), Param::kGamma, "gamma > 0");
  add(p.f >= 0 && p.f <= 1, Param::kF, "0 <= f <= 1");
  add(p.alpha >= 0 && p.alpha <= 1, Param::kAlpha, "0 <= alpha <= 1");
  add(p.beta >= 0 && p.beta < 1, Param::kBeta, "0 <= beta < 1");
  add(p.l > 0 && p.l < 1, Param::kL, "0 < l < 1");
  add(p.v > 0 && std::isfinite(p.v), Param::kV, "v > 0");
  add(p.w > 0 && std::isfinite(p.w), Param::kW, "w > 0");
}

}  // namespace

std::string_view ParamName(Param p) {
  switch (p) {
    case Param::kGamma: return "gamma";
    case Param::kR: return "r";
    case Param::kF: return "f";
    case Param::kAlpha: return "alpha";
    case Param::kBeta: return "beta";
    case Param::kL: return "l";
    case Param::kV: return "v";
    case Param::kW: return "w";
  }
  return "?";
}

std::optional<Param> ParseParam(std::string_view name) {
  for (Param p : kAllParams) {
    if (ParamName(p) == name) return p;
  }
  return std::nullopt;
}

double ParamValues::get(Param p) const {
  switch (p) {
    case Param::kGamma: return gamma;
    case Param::kR: return r;
    case Param::kF: return f;
    case Param::kAlpha: return alpha;
    case Param::kBeta: return beta;
    case Param::kL: return l;
    case Param::kV: return v;
    case Param::kW: return w;
  }
  return 0.0;
}

void ParamValues::set(Param p, double value) {
  switch (p) {
    case Param::kGamma: gamma = value; break;
    case Param::kR: r = value; break;
    case Param::kF: f = value; break;
    case Param::kAlpha: alpha = value; break;
    case Param::kBeta: beta = value; break;
    case Param::kL: l = value; break;
    case Param::kV: v = value; break;
    case Param::kW: w = value; break;
  }
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(DescribeViolations(violations)),
      violations_(std::move(violations)) {}

TopRatingError::TopRatingError(Violation v) : ValidationError({v}) {}

GameParams ValidateParams(const ParamValues& raw) {
  std::vector<Violation> vs;
  bool top = false;
  if (raw.r == 1.0) {
    top = true;
  } else if (!(raw.r >= 0 && raw.r < 1)) {
    vs.push_back({Violation::Kind::kOutOfRange, Param::kR, raw.r, "0 <= r < 1"});
  }
  CheckNonRating(raw, vs);
  if (top) {
    Violation tv{Violation::Kind::kTopRating, Param::kR, raw.r, "r < 1"};
    if (vs.empty()) throw TopRatingError(tv);
    vs.insert(vs.begin(), tv);
  }
  if (!vs.empty()) throw ValidationError(std::move(vs));
  return GameParams(raw);
}

GameParams GameParams::AtTopRating(const ParamValues& raw) {
  std::vector<Violation> vs;
  if (raw.r != 1.0) {
    vs.push_back({Violation::Kind::kOutOfRange, Param::kR, raw.r, "r == 1"});
  }
  CheckNonRating(raw, vs);
  if (!vs.empty()) throw ValidationError(std::move(vs));
  return GameParams(raw);
}

GameParams ValidateAllowingTopRating(const ParamValues& raw) {
  if (raw.r == 1.0) return GameParams::AtTopRating(raw);
  return ValidateParams(raw);
}

GameParams GameParams::With(Param p, double value) const {
  ParamValues next = v_;
  next.set(p, value);
  return ValidateAllowingTopRating(next);
}

bool StrategyProfile::valid() const {
  return p_cheat >= 0 && p_cheat <= 1 && p_ban_given_s >= 0 &&
         p_ban_given_s <= 1;
}

}  // namespace rankgame
