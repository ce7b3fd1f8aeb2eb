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

#ifndef RANKGAME_PARAMS_H_
#define RANKGAME_PARAMS_H_

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rankgame {

// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The eight scalar model parameters, in canonical order.
enum class Param { kGamma, kR, kF, kAlpha, kBeta, kL, kV, kW };

inline constexpr std::array<Param, 8> kAllParams = {
    Param::kGamma, Param::kR, Param::kF, Param::kAlpha,
    Param::kBeta,  Param::kL, Param::kV, Param::kW};

// "gamma", "r", "f", "alpha", "beta", "l", "v", "w".
std::string_view ParamName(Param p);
std::optional<Param> ParseParam(std::string_view name);

// Unvalidated parameter candidate. Plain aggregate so callers can build one
// field by field (config files, sweeps, fuzzers).
struct ParamValues {
  double gamma = 1.0;  // revenue per unit rating
  double r = 0.0;      // stage-t1 rating
  double f = 0.0;      // commission fee fraction
  double alpha = 0.0;  // false-alert rate for honest apps that reach rating 1
  double beta = 0.0;   // missed-alert rate for cheaters
  double l = 0.5;      // chance an honest app reaches rating 1
  double v = 1.0;      // platform cost of a false accusation
  double w = 1.0;      // platform cost of undetected cheating

  double get(Param p) const;
  void set(Param p, double value);
};

struct Violation {
  enum class Kind { kOutOfRange, kTopRating };
  Kind kind;
  Param field;
  double value;
  std::string bound;  // human-readable, e.g. "0 <= f <= 1"
};

// Thrown by ValidateParams; lists every violated bound.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// r = 1 with every other field valid. Callers that can handle the
// guaranteed-top-rating case route to GameParams::AtTopRating.
class TopRatingError : public ValidationError {
 public:
  explicit TopRatingError(Violation v);
};

// Validated, immutable parameter set.
class GameParams {
 public:
  double gamma() const { return v_.gamma; }
  double r() const { return v_.r; }
  double f() const { return v_.f; }
  double alpha() const { return v_.alpha; }
  double beta() const { return v_.beta; }
  double l() const { return v_.l; }
  double v() const { return v_.v; }
  double w() const { return v_.w; }
  double get(Param p) const { return v_.get(p); }
  const ParamValues& values() const { return v_; }

  // True only for sets built through AtTopRating (r = 1).
  bool top_rating() const { return v_.r == 1.0; }

  // Copy with one field replaced, re-validated. Keeps the top-rating path
  // when the result has r = 1.
  GameParams With(Param p, double value) const;

  // Validates everything except r, which must be exactly 1.
  static GameParams AtTopRating(const ParamValues& raw);

 private:
  friend GameParams ValidateParams(const ParamValues& raw);
  explicit GameParams(const ParamValues& v) : v_(v) {}
  ParamValues v_;
};

// Throws TopRatingError when r = 1 is the only problem, ValidationError
// otherwise.
GameParams ValidateParams(const ParamValues& raw);

// ValidateParams, but r = 1 is routed to GameParams::AtTopRating.
GameParams ValidateAllowingTopRating(const ParamValues& raw);

// Behavioural strategies of the two players.
struct StrategyProfile {
  double p_cheat = 0.0;        // app plays c
  double p_ban_given_s = 0.0;  // platform plays b after alert s

  bool valid() const;
};

enum class Signal { kS, kNotS };

// One realised path through the game tree.
struct Outcome {
  bool cheated = false;
  double rating_final = 0.0;  // 0, r or 1
  Signal signal = Signal::kNotS;
  bool banned = false;
};

struct PayoffPair {
  double eu_app = 0.0;
  double eu_platform = 0.0;
};

}  // namespace rankgame

#endif  // RANKGAME_PARAMS_H_
