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

#ifndef RANKGAME_CURVES_H_
#define RANKGAME_CURVES_H_

#include <optional>
#include <string>
#include <string_view>

#include "rankgame/params.h"

namespace rankgame {

// Curve values are clamped to [kCurveEps, 1 - kCurveEps].
inline constexpr double kCurveEps = 1e-9;

class CurveError : public Error {
 public:
  using Error::Error;
};

// A scalar function of the rating: constant(k) or affine(a, b) = a + b*r.
struct CurveFn {
  enum class Kind { kConstant, kAffine };
  Kind kind = Kind::kConstant;
  double a = 0.0;  // constant value, or intercept
  double b = 0.0;  // slope; zero for constants

  static CurveFn Constant(double k) { return {Kind::kConstant, k, 0.0}; }
  static CurveFn Affine(double a, double b) { return {Kind::kAffine, a, b}; }

  // Accepts "constant:K" and "affine:A:B".
  static CurveFn Parse(std::string_view text);
  std::string ToString() const;

  double operator()(double r) const;
};

// Rating-dependent alpha, beta and l. Absent curves leave the scalar value
// untouched.
struct RatingCurves {
  std::optional<CurveFn> alpha;
  std::optional<CurveFn> beta;
  std::optional<CurveFn> l;

  // l must be strictly increasing (affine, positive slope); beta weakly
  // increasing. Throws CurveError.
  void Validate() const;

  // base with alpha, beta and l replaced by their curve values at base.r.
  // A field named in `keep` is left alone.
  ParamValues Apply(ParamValues base,
                    std::optional<Param> keep = std::nullopt) const;

  bool empty() const { return !alpha && !beta && !l; }
};

}  // namespace rankgame

#endif  // RANKGAME_CURVES_H_
