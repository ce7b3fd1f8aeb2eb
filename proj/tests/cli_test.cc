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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "rankgame/analysis.h"
#include "rankgame/cli.h"
#include "rankgame/config.h"
#include "rankgame/csv.h"
#include "rankgame/numfmt.h"
#include "rankgame/svg.h"

namespace rankgame {
namespace {

namespace fs = std::filesystem;

const std::vector<std::string> kReferenceSets = {
    "--set", "gamma=1", "--set", "r=0.6",  "--set", "f=0.5", "--set", "alpha=0.1",
    "--set", "beta=0.1", "--set", "l=0.6", "--set", "v=9",   "--set", "w=3"};

const char* kReferenceConfig = R"(# reference setting; f is swept
gamma = 1
r = 0.6
alpha = 0.1
beta = 0.1   # miss rate
l = 0.6
v = 9
w = 3
)";

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult Cli(std::vector<std::string> args, const std::vector<std::string>& extra = {}) {
  args.insert(args.end(), extra.begin(), extra.end());
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> With(std::string cmd, std::vector<std::string> tail = kReferenceSets) {
  tail.insert(tail.begin(), std::move(cmd));
  return tail;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rankgame_cli_" + std::to_string(::testing::UnitTest::GetInstance()
                                                 ->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::string WriteFile(const std::string& name, const std::string& body) const {
    std::ofstream(Path(name)) << body;
    return Path(name);
  }

  static std::string Slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, SolvePrintsMixedEquilibrium) {
  const CliResult run = Cli(With("solve"));
  EXPECT_EQ(run.code, 0) << run.err;
  EXPECT_NE(run.out.find("regime       Mixed"), std::string::npos) << run.out;
  EXPECT_NE(run.out.find("P_c          0.20212766"), std::string::npos);
  EXPECT_NE(run.out.find("P_b          0.19047619"), std::string::npos);
}

TEST_F(CliTest, SolveRejectsBadRating) {
  const CliResult run = Cli(With("solve"), {"--set", "r=1.2"});
  EXPECT_EQ(run.code, kExitInvalid);
  EXPECT_NE(run.err.find("r = 1.2"), std::string::npos) << run.err;
}

TEST_F(CliTest, SolveAtTopRatingIsTrivial) {
  const CliResult run = Cli(With("solve"), {"--set", "r=1"});
  EXPECT_EQ(run.code, 0) << run.err;
  EXPECT_NE(run.out.find("TrivialTopRating"), std::string::npos);
}

TEST_F(CliTest, MissingParameterIsNamed) {
  const CliResult run = Cli({"solve", "--set", "gamma=1"});
  EXPECT_EQ(run.code, kExitInvalid);
  EXPECT_NE(run.err.find("missing parameter 'r'"), std::string::npos) << run.err;
}

TEST_F(CliTest, UnknownFlagAndCommand) {
  EXPECT_EQ(Cli({"solve", "--bogus"}).code, kExitInvalid);
  EXPECT_EQ(Cli({"dance"}).code, kExitInvalid);
  EXPECT_EQ(Cli({}).code, kExitInvalid);
  EXPECT_EQ(Cli(With("solve"), {"--set", "delta=1"}).code, kExitInvalid);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, VerifyAcceptsSolveOutput) {
  const std::vector<std::vector<std::string>> variants = {
      {},                                   // Mixed
      {"--set", "w=0.3"},                   // NoBanCheat
      {"--set", "beta=0.9"},                // BanCheat
      {"--set", "alpha=0"},                 // AlphaZeroPure
      {"--set", "r=1"},                     // TrivialTopRating
      {"--set", "f=0.93", "--set", "w=4"},  // Mixed near the switch
  };
  for (const auto& extra : variants) {
    const std::string eq = Path("eq.toml");
    auto args = With("solve");
    args.insert(args.end(), extra.begin(), extra.end());
    const CliResult solved = Cli(args, {"--out", eq});
    ASSERT_EQ(solved.code, 0) << solved.err;
    const CliResult verified = Cli({"verify", "--in", eq});
    EXPECT_EQ(verified.code, 0) << verified.out << verified.err;
    EXPECT_NE(verified.out.find("passed                   true"), std::string::npos);
  }
}

TEST_F(CliTest, VerifyFailsOnPerturbedProfile) {
  const CliResult run = Cli(With("verify"), {"--profile", "0.25,0.19047619"});
  EXPECT_EQ(run.code, kExitVerifyFailed) << run.out;
  EXPECT_EQ(Cli(With("verify"), {"--profile", "0.2,oops"}).code, kExitInvalid);
  EXPECT_EQ(Cli(With("verify")).code, kExitOk);
}

TEST_F(CliTest, OptimizeFee) {
  const std::string csv = Path("fee.csv");
  auto args = With("optimize-fee");
  const CliResult run = Cli(args, {"--out", csv});
  ASSERT_EQ(run.code, 0) << run.err;
  EXPECT_NE(run.out.find("f_star       0.305"), std::string::npos) << run.out;
  const std::string body = Slurp(csv);
  EXPECT_EQ(body.substr(0, body.find('\n')), "axis,value,f_star,eu_star,regime,refined");

  const CliResult corner = Cli(args, {"--set", "w=4"});
  EXPECT_NE(corner.out.find("f_star       1\n"), std::string::npos) << corner.out;

  const CliResult by_beta = Cli(args, {"--axis", "beta=0.1,0.3,0.5", "--out", csv});
  ASSERT_EQ(by_beta.code, 0) << by_beta.err;
  std::istringstream lines(Slurp(csv));
  std::string line;
  std::getline(lines, line);
  std::vector<double> f_star;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string cell;
    for (int i = 0; i < 3; ++i) std::getline(cells, cell, ',');
    f_star.push_back(std::stod(cell));
  }
  ASSERT_EQ(f_star.size(), 3u);
  EXPECT_GE(f_star[0], f_star[1]);
  EXPECT_GE(f_star[1], f_star[2]);
}

TEST_F(CliTest, SweepWritesCsvAndSvg) {
  const std::string cfg = WriteFile("reference.toml", kReferenceConfig);
  const std::string csv = Path("interior.csv");
  const std::string svg = Path("interior.svg");
  const CliResult run = Cli({"sweep", "--axis", "f:0:1:101", "--config", cfg, "--out",
                       csv, "--svg", svg});
  ASSERT_EQ(run.code, 0) << run.err;
  EXPECT_NE(run.out.find("peak         f = 0.31"), std::string::npos) << run.out;

  std::ifstream in(csv);
  const auto rows = ReadSweepCsv(in);
  ASSERT_EQ(rows.size(), 101u);
  const auto best = std::max_element(rows.begin(), rows.end(), [](auto& a, auto& b) {
    return a.eu_platform < b.eu_platform;
  });
  EXPECT_NEAR(best->value, 0.30, 0.02);
  EXPECT_EQ(Slurp(csv).substr(0, kSweepHeader.size()), kSweepHeader);

  const std::string chart = Slurp(svg);
  EXPECT_EQ(chart.rfind("<svg", 0), 0u);
  EXPECT_NE(chart.find("viewBox=\"0 0 800 600\""), std::string::npos);
  EXPECT_NE(chart.find("<polyline"), std::string::npos);
  // The namespace declaration is the only URL; no links or embedded assets.
  EXPECT_EQ(chart.find("http"), chart.rfind("http"));
  EXPECT_EQ(chart.find("href"), std::string::npos);
  EXPECT_NE(chart.find("</svg>"), std::string::npos);
}

TEST_F(CliTest, CsvRoundTripReproducesColumns) {
  const std::string cfg = WriteFile("reference.toml", kReferenceConfig);
  const std::string csv = Path("rt.csv");
  for (const char* axis : {"f:0:1:101", "beta:0:0.95:77", "w:0.1:5:64", "r=0.25,0.6,1"}) {
    ASSERT_EQ(Cli({"sweep", "--axis", axis, "--config", cfg, "--set", "f=0.5",
                   "--out", csv}).code, 0);
    std::ifstream in(csv);
    const auto rows = ReadSweepCsv(in);
    ASSERT_FALSE(rows.empty());
    ModelConfig config = ParseConfig(kReferenceConfig);
    config.scalars[Param::kF] = 0.5;
    const SweepBase base{ResolveValues(config), config.curves};
    for (const CsvRow& row : rows) {
      const Param param = *ParseParam(row.axis);
      const GameParams p = ParamsAt(base, param, row.value);
      const Equilibrium eq = SolveEquilibrium(p);
      auto same = [](double printed, double recomputed) {
        return std::abs(printed - RoundToPrinted(recomputed)) <= 1e-9;
      };
      EXPECT_TRUE(same(row.p_cheat, eq.profile.p_cheat)) << axis << " " << row.value;
      EXPECT_TRUE(same(row.p_ban, eq.profile.p_ban_given_s));
      if (eq.posterior_cheat_given_s) {
        EXPECT_TRUE(same(row.posterior, *eq.posterior_cheat_given_s));
      } else {
        EXPECT_TRUE(std::isnan(row.posterior));
      }
      EXPECT_TRUE(same(row.eu_app, eq.eu_app));
      EXPECT_TRUE(same(row.eu_platform, PlatformEquilibriumUtility(p)));
      EXPECT_EQ(row.regime, RegimeName(eq.regime));
    }
  }
}

TEST_F(CliTest, SweepWithCurves) {
  const std::string cfg = WriteFile("curves.toml", R"(gamma = 1
f = 0.5
v = 9
w = 3
[curves]
alpha = "constant:0.1"
beta = "constant:0.1"
l = "affine:0.0:1.0"
)");
  const std::string csv = Path("r.csv");
  const CliResult run = Cli({"sweep", "--axis", "r:0.1:0.9:9", "--config", cfg, "--out",
                       csv, "--series", "P_c,P_b"});
  ASSERT_EQ(run.code, 0) << run.err;
  std::ifstream in(csv);
  const auto rows = ReadSweepCsv(in);
  ASSERT_EQ(rows.size(), 9u);
  for (size_t i = 1; i < rows.size(); ++i) EXPECT_GT(rows[i].p_cheat, rows[i - 1].p_cheat);

  EXPECT_EQ(Cli({"sweep", "--axis", "r:0.1:0.9:9", "--config", cfg, "--series",
                 "nonsense"}).code, kExitInvalid);
}

TEST_F(CliTest, SimulateNeedsSeedAndIsReproducible) {
  EXPECT_EQ(Cli(With("simulate")).code, kExitInvalid);
  const std::string a = Path("a.csv");
  const std::string b = Path("b.csv");
  ASSERT_EQ(Cli(With("simulate"), {"--seed", "42", "--n", "200000", "--out", a}).code, 0);
  ASSERT_EQ(Cli(With("simulate"), {"--seed", "42", "--n", "200000", "--out", b,
                                   "--serial"}).code, 0);
  EXPECT_EQ(Slurp(a), Slurp(b));
  EXPECT_NE(Slurp(a).find("200000,42,"), std::string::npos);
}

TEST_F(CliTest, UnwritableOutputFailsBeforeWork) {
  const CliResult run = Cli(With("solve"), {"--out", "/nonexistent/dir/eq.toml"});
  EXPECT_EQ(run.code, kExitInvalid);
  EXPECT_NE(run.err.find("cannot write"), std::string::npos);
}

TEST(ConfigTest, ParsesScalarsCurvesAndComments) {
  const ModelConfig c = ParseConfig(
      "gamma = 2 # comment\n\n[curves]\nl = \"affine:0.1:0.5\"\nbeta=\"constant:0.2\"\n");
  EXPECT_EQ(c.scalars.at(Param::kGamma), 2.0);
  ASSERT_TRUE(c.curves.l);
  EXPECT_EQ(c.curves.l->b, 0.5);
  ASSERT_TRUE(c.curves.beta);
  EXPECT_FALSE(c.curves.alpha);
}

TEST(ConfigTest, Errors) {
  EXPECT_THROW(ParseConfig("gamma 1\n"), ConfigError);
  EXPECT_THROW(ParseConfig("delta = 1\n"), ConfigError);
  EXPECT_THROW(ParseConfig("gamma = one\n"), ConfigError);
  EXPECT_THROW(ParseConfig("[weird]\n"), ConfigError);
  EXPECT_THROW(ParseConfig("[curves]\nv = \"constant:1\"\n"), ConfigError);
  EXPECT_THROW(ParseConfig("[curves]\nl = \"cubic\"\n"), ConfigError);
  EXPECT_THROW(LoadConfigFile("/nonexistent.toml"), ConfigError);
}

TEST(ConfigTest, OverrideReplacesCurve) {
  ModelConfig c = ParseConfig("[curves]\nalpha = \"constant:0.3\"\n");
  ApplyOverride(c, "alpha=0.2");
  EXPECT_FALSE(c.curves.alpha);
  EXPECT_EQ(c.scalars.at(Param::kAlpha), 0.2);
  EXPECT_THROW(ApplyOverride(c, "alpha"), ConfigError);
}

TEST(SvgTest, HandlesFlatAndEmptySeries) {
  const std::string flat = RenderLineChart("t <&>", "x", {{"a", {0, 1}, {2, 2}}});
  EXPECT_NE(flat.find("t &lt;&amp;&gt;"), std::string::npos);
  EXPECT_NE(flat.find("<polyline"), std::string::npos);
  const std::string empty = RenderLineChart("t", "x", {});
  EXPECT_NE(empty.find("</svg>"), std::string::npos);
}

}  // namespace
}  // namespace rankgame
