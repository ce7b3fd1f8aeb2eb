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

#include "rankgame/cli.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "rankgame/analysis.h"
#include "rankgame/config.h"
#include "rankgame/csv.h"
#include "rankgame/equilibrium.h"
#include "rankgame/monte_carlo.h"
#include "rankgame/numfmt.h"
#include "rankgame/oracle.h"
#include "rankgame/svg.h"

namespace rankgame {
namespace {

struct Options {
  std::string config_path;
  std::vector<std::string> sets;
  std::string out_path;
  std::string svg_path;
  std::string in_path;
  std::string axis;
  std::string series = "eu_platform";
  std::string profile;
  double step = 1e-3;
  double tol = kDefaultVerifyTol;
  int64_t n = 1'000'000;
  uint64_t seed = 0;
  bool serial = false;
};

ModelConfig LoadModel(const Options& opt) {
  ModelConfig config;
  if (!opt.in_path.empty()) config = LoadConfigFile(opt.in_path);
  if (!opt.config_path.empty()) {
    ModelConfig file = LoadConfigFile(opt.config_path);
    for (const auto& [p, x] : file.scalars) config.scalars[p] = x;
    if (file.curves.alpha) config.curves.alpha = file.curves.alpha;
    if (file.curves.beta) config.curves.beta = file.curves.beta;
    if (file.curves.l) config.curves.l = file.curves.l;
  }
  for (const auto& s : opt.sets) ApplyOverride(config, s);
  config.curves.Validate();
  return config;
}

GameParams ResolveParams(const ModelConfig& config,
                         std::initializer_list<Param> optional = {}) {
  return ValidateAllowingTopRating(
      config.curves.Apply(ResolveValues(config, optional)));
}

// Opens every requested output before any computation.
std::unique_ptr<std::ofstream> OpenOutput(const std::string& path) {
  if (path.empty()) return nullptr;
  auto file = std::make_unique<std::ofstream>(path, std::ios::trunc);
  if (!*file) throw ConfigError(fmt::format("cannot write '{}'", path));
  return file;
}

StrategyProfile ParseProfile(const std::string& text) {
  const size_t comma = text.find(',');
  if (comma == std::string::npos) {
    throw ConfigError(fmt::format("--profile expects p_cheat,p_ban, got '{}'", text));
  }
  char* end = nullptr;
  const std::string a = text.substr(0, comma);
  const std::string b = text.substr(comma + 1);
  StrategyProfile prof;
  prof.p_cheat = std::strtod(a.c_str(), &end);
  const bool ok_a = !a.empty() && *end == '\0';
  prof.p_ban_given_s = std::strtod(b.c_str(), &end);
  const bool ok_b = !b.empty() && *end == '\0';
  if (!ok_a || !ok_b || !prof.valid()) {
    throw ConfigError(fmt::format("--profile '{}' is not two probabilities", text));
  }
  return prof;
}

std::string Posterior(const std::optional<double>& post) {
  return post ? FormatNumber(*post) : "undefined (Pr(s) = 0)";
}

void PrintEquilibrium(std::ostream& out, const Equilibrium& eq) {
  out << fmt::format("regime       {}\n", RegimeName(eq.regime))
      << fmt::format("P_c          {}\n", FormatNumber(eq.profile.p_cheat))
      << fmt::format("P_b          {}\n", FormatNumber(eq.profile.p_ban_given_s))
      << fmt::format("posterior    {}\n", Posterior(eq.posterior_cheat_given_s))
      << fmt::format("eu_app       {}\n", FormatNumber(eq.eu_app))
      << fmt::format("eu_platform  {}\n", FormatNumber(eq.eu_platform))
      << fmt::format("non_unique   {}\n", eq.non_unique);
}

void PrintReport(std::ostream& out, const VerificationReport& rep) {
  out << fmt::format("regret_app               {:.3e}\n", rep.regret_app)
      << fmt::format("regret_platform_at_s     {:.3e}{}\n",
                     rep.regret_platform_at_s, rep.off_path ? " (off path)" : "")
      << fmt::format("indiff_residual_app      {:.3e}\n", rep.indiff_residual_app)
      << fmt::format("indiff_residual_platform {:.3e}\n",
                     rep.indiff_residual_platform)
      << fmt::format("passed                   {}\n", rep.passed);
}

// Full-precision equilibrium file: the parameters at top level plus an
// [equilibrium] section. Readable back as a config.
void WriteEquilibriumFile(std::ostream& file, const GameParams& p,
                          const Equilibrium& eq) {
  for (Param param : kAllParams) {
    file << fmt::format("{} = {:.17g}\n", ParamName(param), p.get(param));
  }
  file << "\n[equilibrium]\n"
       << fmt::format("regime = \"{}\"\n", RegimeName(eq.regime))
       << fmt::format("p_cheat = {:.17g}\n", eq.profile.p_cheat)
       << fmt::format("p_ban_given_s = {:.17g}\n", eq.profile.p_ban_given_s);
  if (eq.posterior_cheat_given_s) {
    file << fmt::format("posterior = {:.17g}\n", *eq.posterior_cheat_given_s);
  }
  file << fmt::format("eu_app = {:.17g}\n", eq.eu_app)
       << fmt::format("eu_platform = {:.17g}\n", eq.eu_platform)
       << fmt::format("non_unique = {}\n", eq.non_unique);
}

Equilibrium EquilibriumFromFile(const std::map<std::string, std::string>& kv) {
  auto number = [&](const char* key) {
    const auto it = kv.find(key);
    if (it == kv.end()) {
      throw ConfigError(fmt::format("[equilibrium] is missing '{}'", key));
    }
    char* end = nullptr;
    const double x = std::strtod(it->second.c_str(), &end);
    if (it->second.empty() || *end != '\0') {
      throw ConfigError(fmt::format("[equilibrium] {} = '{}' is not a number",
                                    key, it->second));
    }
    return x;
  };
  Equilibrium eq;
  const auto regime_it = kv.find("regime");
  if (regime_it == kv.end()) throw ConfigError("[equilibrium] is missing 'regime'");
  const auto regime = ParseRegime(regime_it->second);
  if (!regime) {
    throw ConfigError(fmt::format("unknown regime '{}'", regime_it->second));
  }
  eq.regime = *regime;
  eq.profile = {number("p_cheat"), number("p_ban_given_s")};
  if (kv.count("posterior")) eq.posterior_cheat_given_s = number("posterior");
  eq.non_unique = eq.regime.kind == RegimeKind::kBoundary;
  return eq;
}

int RunSolve(const Options& opt, std::ostream& out) {
  const ModelConfig config = LoadModel(opt);
  auto file = OpenOutput(opt.out_path);
  const GameParams p = ResolveParams(config);
  const Equilibrium eq = SolveEquilibrium(p);
  PrintEquilibrium(out, eq);
  if (file) WriteEquilibriumFile(*file, p, eq);
  return kExitOk;
}

void PrintOptimum(std::ostream& out, const FeeOptimum& opt) {
  out << fmt::format("f_star       {}\n", FormatNumber(opt.f_star))
      << fmt::format("eu_star      {}\n", FormatNumber(opt.eu_star))
      << fmt::format("regime       {}\n", RegimeName(opt.regime_at_star))
      << fmt::format("grid_step    {}\n", FormatNumber(opt.grid_resolution))
      << fmt::format("refined      {}\n", opt.refined);
}

int RunOptimizeFee(const Options& opt, std::ostream& out) {
  const ModelConfig config = LoadModel(opt);
  auto file = OpenOutput(opt.out_path);
  const FeeGrid grid{opt.step};
  if (opt.axis.empty()) {
    ParamValues raw = config.curves.Apply(ResolveValues(config, {Param::kF}));
    raw.f = 0.0;
    ValidateAllowingTopRating(raw);
    const FeeOptimum best = OptimizeFee(raw, grid);
    PrintOptimum(out, best);
    if (file) {
      FeeSweepRow row{Param::kF, best.f_star, true, "", best};
      WriteFeeCsv(*file, {row});
    }
    return kExitOk;
  }
  const SweepAxis axis = SweepAxis::Parse(opt.axis);
  SweepBase base{ResolveValues(config, {Param::kF, axis.param}), config.curves};
  base.scalars.f = 0.0;
  const auto rows = OptimizeFeeSweep(base, axis, grid);
  int bad = 0;
  out << fmt::format("{:>12} {:>12} {:>12}  regime\n", ParamName(axis.param),
                     "f_star", "eu_star");
  for (const auto& row : rows) {
    if (!row.ok) {
      ++bad;
      spdlog::warn("{} = {}: {}", ParamName(row.axis), row.value, row.error);
      continue;
    }
    out << fmt::format("{:>12} {:>12} {:>12}  {}\n", FormatNumber(row.value),
                       FormatNumber(row.optimum.f_star),
                       FormatNumber(row.optimum.eu_star),
                       RegimeName(row.optimum.regime_at_star));
  }
  if (file) WriteFeeCsv(*file, rows);
  return bad == static_cast<int>(rows.size()) ? kExitInvalid : kExitOk;
}

double SeriesValue(const SweepRow& row, const std::string& name) {
  if (name == "P_c") return row.p_cheat;
  if (name == "P_b") return row.p_ban;
  if (name == "posterior") return row.posterior.value_or(NAN);
  if (name == "eu_app") return row.eu_app;
  if (name == "eu_platform") return row.eu_platform;
  throw ConfigError(fmt::format(
      "unknown series '{}' (P_c, P_b, posterior, eu_app, eu_platform)", name));
}

int RunSweep(const Options& opt, std::ostream& out) {
  const ModelConfig config = LoadModel(opt);
  const SweepAxis axis = SweepAxis::Parse(opt.axis);
  std::vector<std::string> series_names;
  for (size_t start = 0;;) {
    const size_t comma = opt.series.find(',', start);
    series_names.push_back(opt.series.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  SweepRow probe;
  for (const auto& name : series_names) SeriesValue(probe, name);

  auto csv = OpenOutput(opt.out_path);
  auto svg = OpenOutput(opt.svg_path);
  const SweepBase base{ResolveValues(config, {axis.param}), config.curves};

  const auto start = std::chrono::steady_clock::now();
  const auto rows = Sweep(base, axis);
  spdlog::info("swept {} points in {:.3f} s", rows.size(),
               std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start).count());

  int bad = 0;
  const SweepRow* peak = nullptr;
  for (const auto& row : rows) {
    if (!row.ok) {
      ++bad;
      spdlog::warn("{} = {}: {}", ParamName(row.axis), row.value, row.error);
      continue;
    }
    if (!peak || row.eu_platform > peak->eu_platform) peak = &row;
  }
  out << fmt::format("rows         {}\n", rows.size())
      << fmt::format("invalid      {}\n", bad);
  if (peak) {
    out << fmt::format("peak         {} = {} (eu_platform {}, {})\n",
                       ParamName(axis.param), FormatNumber(peak->value),
                       FormatNumber(peak->eu_platform), RegimeName(peak->regime));
  }
  if (csv) WriteSweepCsv(*csv, rows);
  if (svg) {
    std::vector<ChartSeries> chart;
    for (const auto& name : series_names) {
      ChartSeries s{name, {}, {}};
      for (const auto& row : rows) {
        s.x.push_back(row.value);
        s.y.push_back(row.ok ? SeriesValue(row, name) : NAN);
      }
      chart.push_back(std::move(s));
    }
    *svg << RenderLineChart(fmt::format("Equilibrium sweep over {}",
                                        ParamName(axis.param)),
                            std::string(ParamName(axis.param)), chart);
  }
  return bad == static_cast<int>(rows.size()) ? kExitInvalid : kExitOk;
}

int RunVerify(const Options& opt, std::ostream& out) {
  const ModelConfig config = LoadModel(opt);
  const GameParams p = ResolveParams(config);
  Equilibrium eq;
  if (!opt.profile.empty()) {
    eq.profile = ParseProfile(opt.profile);
    eq.regime = ClassifyRegime(p);
  } else if (!config.equilibrium.empty()) {
    eq = EquilibriumFromFile(config.equilibrium);
  } else {
    eq = SolveEquilibrium(p);
  }
  const VerificationReport rep = VerifyEquilibrium(p, eq, opt.tol);
  out << fmt::format("regime                   {}\n", RegimeName(eq.regime))
      << fmt::format("profile                  ({}, {})\n",
                     FormatNumber(eq.profile.p_cheat),
                     FormatNumber(eq.profile.p_ban_given_s))
      << fmt::format("tolerance                {:.3e}\n", opt.tol);
  PrintReport(out, rep);
  return rep.passed ? kExitOk : kExitVerifyFailed;
}

int RunSimulate(const Options& opt, std::ostream& out) {
  const ModelConfig config = LoadModel(opt);
  auto file = OpenOutput(opt.out_path);
  const GameParams p = ResolveParams(config);
  const StrategyProfile prof = opt.profile.empty()
                                   ? SolveEquilibrium(p).profile
                                   : ParseProfile(opt.profile);
  const McEstimate est = opt.serial
                             ? MonteCarloPayoffsSerial(p, prof, opt.n, opt.seed)
                             : MonteCarloPayoffs(p, prof, opt.n, opt.seed);
  const PayoffPair exact = EnumeratedPayoffs(p, prof);
  auto z = [](double mean, double exact_value, double se) {
    return se > 0 ? (mean - exact_value) / se : (mean == exact_value ? 0.0 : INFINITY);
  };
  out << fmt::format("profile        ({}, {})\n", FormatNumber(prof.p_cheat),
                     FormatNumber(prof.p_ban_given_s))
      << fmt::format("n              {}\n", est.n)
      << fmt::format("seed           {}\n", est.seed)
      << fmt::format("app            {} +/- {} (exact {}, z = {:.3f})\n",
                     FormatNumber(est.mean_app), FormatNumber(est.std_err_app),
                     FormatNumber(exact.eu_app),
                     z(est.mean_app, exact.eu_app, est.std_err_app))
      << fmt::format("platform       {} +/- {} (exact {}, z = {:.3f})\n",
                     FormatNumber(est.mean_platform),
                     FormatNumber(est.std_err_platform),
                     FormatNumber(exact.eu_platform),
                     z(est.mean_platform, exact.eu_platform, est.std_err_platform));
  if (file) {
    *file << "n,seed,mean_app,std_err_app,mean_platform,std_err_platform\n"
          << fmt::format("{},{},{:.17g},{:.17g},{:.17g},{:.17g}\n", est.n,
                         est.seed, est.mean_app, est.std_err_app,
                         est.mean_platform, est.std_err_platform);
  }
  return kExitOk;
}

void AddModelFlags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--config", opt.config_path,
                  "key = value model file with optional [curves] section");
  cmd->add_option("--set", opt.sets, "override one parameter, e.g. --set f=0.5")
      ->allow_extra_args(false);
}

}  // namespace

void ConfigureLogging() {
  auto logger = spdlog::get("rankgame");
  if (!logger) {
    logger = spdlog::stderr_logger_mt("rankgame");
    logger->set_pattern("[%l] %v");
    spdlog::set_default_logger(logger);
  }
  const char* env = std::getenv("RANKGAME_LOG");
  const std::string level = env ? env : "info";
  if (level == "quiet") {
    spdlog::set_level(spdlog::level::off);
  } else if (level == "debug") {
    spdlog::set_level(spdlog::level::debug);
  } else {
    spdlog::set_level(spdlog::level::info);
    if (level != "info") {
      spdlog::warn("RANKGAME_LOG='{}' not one of quiet, info, debug", level);
    }
  }
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  ConfigureLogging();
  Options opt;
  CLI::App app{"Equilibrium solver and verifier for the rating-manipulation game",
               "rankgame"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "classify the regime and solve the equilibrium");
  AddModelFlags(solve, opt);
  solve->add_option("--out", opt.out_path, "write a full-precision equilibrium file");

  auto* fee = app.add_subcommand("optimize-fee", "maximise the platform's utility over f");
  AddModelFlags(fee, opt);
  fee->add_option("--step", opt.step, "grid step in (0, 0.1]")->capture_default_str();
  fee->add_option("--axis", opt.axis, "optimise at every point of a non-f axis");
  fee->add_option("--out", opt.out_path, "CSV output");

  auto* sweep = app.add_subcommand("sweep", "solve along one parameter axis");
  AddModelFlags(sweep, opt);
  sweep->add_option("--axis", opt.axis, "name:lo:hi:steps or name=v1,v2,...")->required();
  sweep->add_option("--out", opt.out_path, "CSV output");
  sweep->add_option("--svg", opt.svg_path, "SVG line chart output");
  sweep->add_option("--series", opt.series, "comma-separated columns to chart")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "check regrets and indifference residuals");
  AddModelFlags(verify, opt);
  verify->add_option("--in", opt.in_path, "equilibrium file written by solve --out");
  verify->add_option("--profile", opt.profile, "p_cheat,p_ban to verify instead");
  verify->add_option("--tol", opt.tol, "regret tolerance")->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo payoffs under a profile");
  AddModelFlags(simulate, opt);
  simulate->add_option("--seed", opt.seed, "64-bit generator seed")->required();
  simulate->add_option("--n", opt.n, "number of plays")->capture_default_str();
  simulate->add_option("--profile", opt.profile, "p_cheat,p_ban (default: equilibrium)");
  simulate->add_option("--out", opt.out_path, "CSV output");
  simulate->add_flag("--serial", opt.serial, "use the single-threaded reference kernel");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (solve->parsed()) return RunSolve(opt, out);
    if (fee->parsed()) return RunOptimizeFee(opt, out);
    if (sweep->parsed()) return RunSweep(opt, out);
    if (verify->parsed()) return RunVerify(opt, out);
    if (simulate->parsed()) return RunSimulate(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace rankgame
