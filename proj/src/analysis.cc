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

#include "rankgame/analysis.h"

#include <algorithm>
#include <charconv>
#include <cmath>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "rankgame/game.h"
#include "rankgame/numfmt.h"
#include "rankgame/omp.h"

namespace rankgame {
namespace {

// Mixed-regime platform utility for a given cheat probability.
double MixedUtility(const GameParams& p, double p_cheat) {
  const double gf = p.gamma() * p.f();
  const double honest = gf * ((1.0 - p.l()) * p.r() + p.l()) + p.v();
  return (1.0 - p_cheat) * honest + p_cheat * (gf - p.w());
}

double GoldenSectionMax(auto&& fn, double lo, double hi, int iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = fn(x1);
  double f2 = fn(x2);
  for (int i = 0; i < iterations; ++i) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = fn(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = fn(x2);
    }
  }
  return 0.5 * (lo + hi);
}

double ValueOf(const GameParams& p, Target target) {
  switch (target) {
    case Target::kCheat: return MixedCheatProbability(p);
    case Target::kBan: return MixedBanProbability(p);
    case Target::kPlatformUtility: return PlatformEquilibriumUtility(p);
  }
  return 0.0;
}

SweepRow ComputeRow(const SweepBase& base, Param axis, double value) {
  SweepRow row;
  row.axis = axis;
  row.value = value;
  try {
    const GameParams p = ParamsAt(base, axis, value);
    const Equilibrium eq = SolveEquilibrium(p);
    row.p_cheat = eq.profile.p_cheat;
    row.p_ban = eq.profile.p_ban_given_s;
    row.posterior = eq.posterior_cheat_given_s;
    row.eu_app = eq.eu_app;
    row.eu_platform = PlatformEquilibriumUtility(p);
    row.regime = eq.regime;
    row.ok = true;
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

void SortByValue(auto& rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.value < b.value; });
}

double ParseAxisNumber(std::string_view s, std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(fmt::format("bad number '{}' in axis '{}'", s, text));
  }
  return value;
}

}  // namespace

double PlatformUtilityInRegime(const GameParams& p, const Regime& regime) {
  const double gf = p.gamma() * p.f();
  switch (regime.kind) {
    case RegimeKind::kNoBanCheat: return gf - p.w();
    case RegimeKind::kBanCheat: return p.beta() * (gf - p.w());
    case RegimeKind::kMixed: {
      const double honest_alarm = p.alpha() * p.l() * (gf + p.v());
      const double pc =
          honest_alarm / (honest_alarm + (1.0 - p.beta()) * (p.w() - gf));
      return MixedUtility(p, pc);
    }
    case RegimeKind::kTrivialTopRating: return gf + p.v();
    case RegimeKind::kAlphaZeroPure:
      return ExpectedPayoffs(p, {regime.cheats ? 1.0 : 0.0, 1.0}).eu_platform;
    case RegimeKind::kBoundary:
      // The platform is indifferent at s on a boundary, so the never-ban
      // form is exact for the reported profile.
      return MixedUtility(p, SolveEquilibrium(p).profile.p_cheat);
  }
  return 0.0;
}

double PlatformEquilibriumUtility(const GameParams& p) {
  return PlatformUtilityInRegime(p, ClassifyRegime(p));
}

FeeOptimum OptimizeFee(const ParamValues& params_sans_f, FeeGrid grid) {
  if (!(grid.step > 0 && grid.step <= 0.1)) {
    throw Error(fmt::format("fee grid step must lie in (0, 0.1], got {}",
                            grid.step));
  }
  ParamValues raw = params_sans_f;
  raw.f = 0.0;
  const GameParams base = ValidateAllowingTopRating(raw);
  auto at = [&](double f) { return base.With(Param::kF, f); };
  auto eu = [&](double f) { return PlatformEquilibriumUtility(at(f)); };

  FeeOptimum best;
  best.grid_resolution = grid.step;
  best.eu_star = -INFINITY;
  auto offer = [&](double f, double value) {
    if (value > best.eu_star || (value == best.eu_star && f < best.f_star)) {
      best.f_star = f;
      best.eu_star = value;
    }
  };

  const int n = static_cast<int>(std::ceil(1.0 / grid.step - 1e-9));
  for (int i = 0; i <= n; ++i) {
    const double f = i == n ? 1.0 : i * grid.step;
    offer(f, eu(f));
  }

  // Regime switch at gamma*f = w. Both one-sided pieces are evaluated there;
  // the boundary point itself is a candidate.
  const double f_switch = base.w() / base.gamma();
  const bool has_switch = f_switch <= 1.0 && !base.top_rating();
  if (has_switch) {
    const GameParams ps = at(f_switch);
    const Regime left = ClassifyRegime(at(0.5 * f_switch));
    const double left_value = PlatformUtilityInRegime(ps, left);
    const double right_value =
        PlatformUtilityInRegime(ps, {RegimeKind::kNoBanCheat});
    spdlog::debug("fee switch at f = {}: left ({}) {}, right {}", f_switch,
                  RegimeName(left), left_value, right_value);
    offer(f_switch, PlatformEquilibriumUtility(ps));
  }

  if (!(has_switch && best.f_star == f_switch)) {
    double piece_lo = 0.0;
    double piece_hi = 1.0;
    if (has_switch) {
      if (best.f_star < f_switch) piece_hi = f_switch;
      else piece_lo = f_switch;
    }
    const double lo = std::max(piece_lo, best.f_star - grid.step);
    const double hi = std::min(piece_hi, best.f_star + grid.step);
    if (hi > lo) {
      const double f = GoldenSectionMax(eu, lo, hi, grid.refine_iterations);
      const double value = eu(f);
      if (value > best.eu_star) {
        best.f_star = f;
        best.eu_star = value;
        best.refined = true;
      }
    }
  }
  best.regime_at_star = ClassifyRegime(at(best.f_star));
  return best;
}

std::string_view TargetName(Target t) {
  switch (t) {
    case Target::kCheat: return "P_c";
    case Target::kBan: return "P_b";
    case Target::kPlatformUtility: return "EU_P";
  }
  return "?";
}

double ComparativeStatic(const GameParams& params, Target target, Param wrt,
                         double h) {
  const double x = params.get(wrt);
  const GameParams up = params.With(wrt, x + h);
  const GameParams down = params.With(wrt, x - h);
  for (const GameParams* p : {&params, &up, &down}) {
    const Regime regime = ClassifyRegime(*p);
    if (regime.kind != RegimeKind::kMixed) {
      throw RegimeMismatch(fmt::format(
          "d{}/d{} needs the Mixed regime at {} = {}, got {}", TargetName(target),
          ParamName(wrt), ParamName(wrt), p->get(wrt), RegimeName(regime)));
    }
  }
  return (ValueOf(up, target) - ValueOf(down, target)) / (2.0 * h);
}

SweepAxis SweepAxis::Linspace(Param param, double lo, double hi, int steps) {
  if (steps < 1) throw Error("sweep needs at least one step");
  SweepAxis axis{param, {}};
  axis.values.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double x = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
    axis.values.push_back(RoundToPrinted(x));
  }
  return axis;
}

SweepAxis SweepAxis::Parse(std::string_view text) {
  const size_t eq = text.find('=');
  if (eq != std::string_view::npos) {
    const auto param = ParseParam(text.substr(0, eq));
    if (!param) throw Error(fmt::format("unknown axis parameter in '{}'", text));
    SweepAxis axis{*param, {}};
    std::string_view rest = text.substr(eq + 1);
    while (!rest.empty()) {
      const size_t comma = rest.find(',');
      axis.values.push_back(ParseAxisNumber(rest.substr(0, comma), text));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (axis.values.empty()) throw Error(fmt::format("empty axis '{}'", text));
    return axis;
  }
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    const size_t pos = text.find(':', start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (parts.size() != 4) {
    throw Error(fmt::format(
        "axis '{}' must be name:lo:hi:steps or name=v1,v2,...", text));
  }
  const auto param = ParseParam(parts[0]);
  if (!param) throw Error(fmt::format("unknown axis parameter in '{}'", text));
  const double steps = ParseAxisNumber(parts[3], text);
  if (steps < 1 || steps != std::floor(steps)) {
    throw Error(fmt::format("axis '{}' needs a positive integer step count", text));
  }
  return Linspace(*param, ParseAxisNumber(parts[1], text),
                  ParseAxisNumber(parts[2], text), static_cast<int>(steps));
}

GameParams ParamsAt(const SweepBase& base, Param axis, double value) {
  ParamValues raw = base.scalars;
  raw.set(axis, value);
  raw = base.curves.Apply(raw, axis);
  return ValidateAllowingTopRating(raw);
}

std::vector<SweepRow> SweepSerial(const SweepBase& base, const SweepAxis& axis) {
  base.curves.Validate();
  std::vector<SweepRow> rows;
  rows.reserve(axis.values.size());
  for (double x : axis.values) rows.push_back(ComputeRow(base, axis.param, x));
  SortByValue(rows);
  return rows;
}

std::vector<SweepRow> Sweep(const SweepBase& base, const SweepAxis& axis) {
  base.curves.Validate();
  const long n = static_cast<long>(axis.values.size());
  std::vector<SweepRow> rows(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) {
    rows[i] = ComputeRow(base, axis.param, axis.values[i]);
  }
  SortByValue(rows);
  return rows;
}

std::vector<FeeSweepRow> OptimizeFeeSweep(const SweepBase& base,
                                          const SweepAxis& axis, FeeGrid grid) {
  if (axis.param == Param::kF) {
    throw Error("fee optimisation cannot sweep over f itself");
  }
  base.curves.Validate();
  const long n = static_cast<long>(axis.values.size());
  std::vector<FeeSweepRow> rows(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    FeeSweepRow& row = rows[i];
    row.axis = axis.param;
    row.value = axis.values[i];
    try {
      ParamValues raw = base.scalars;
      raw.set(axis.param, row.value);
      raw = base.curves.Apply(raw, axis.param);
      row.optimum = OptimizeFee(raw, grid);
      row.ok = true;
    } catch (const Error& e) {
      row.error = e.what();
    }
  }
  SortByValue(rows);
  return rows;
}

}  // namespace rankgame
