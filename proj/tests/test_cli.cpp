// Copyright 2026 The qsv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include <nlohmann/json.hpp>

#include "cli_harness.hpp"
#include "qsv_cli/commands.hpp"
#include "qsv_cli/config.hpp"
#include "qsv_cli/table.hpp"
#include "test_util.hpp"

namespace qsv::cli {
namespace {

using qsv::testing::kind_of;
using qsv::testing::parse_csv;
using qsv::testing::run_cli;
constexpr double kPi = std::numbers::pi;

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qsv_test_" + name);
}

TEST(Config, ParseAngle) {
  EXPECT_DOUBLE_EQ(parse_angle("pi"), kPi);
  EXPECT_DOUBLE_EQ(parse_angle("2pi"), 2 * kPi);
  EXPECT_DOUBLE_EQ(parse_angle("pi/2"), kPi / 2);
  EXPECT_DOUBLE_EQ(parse_angle("-3*pi/4"), -3 * kPi / 4);
  EXPECT_DOUBLE_EQ(parse_angle("0.25"), 0.25);
  EXPECT_DOUBLE_EQ(parse_angle("1e-6"), 1e-6);
  for (const char* bad : {"", "abc", "pi/0", "2*"}) {
    EXPECT_EQ(kind_of([&] { parse_angle(bad); }), ErrorKind::kInvalidParameter) << bad;
  }
}

TEST(Config, ParseNoiseThetaAndStates) {
  EXPECT_EQ(parse_noise("none").kind, NoiseSpec::Kind::kNone);
  const auto dep = parse_noise("depol:0.3");
  EXPECT_EQ(dep.kind, NoiseSpec::Kind::kDepolarize);
  EXPECT_DOUBLE_EQ(dep.amount, 0.3);
  EXPECT_EQ(parse_noise("orth:0.05").kind, NoiseSpec::Kind::kOrthogonal);
  EXPECT_EQ(kind_of([] { parse_noise("depol:2"); }), ErrorKind::kInvalidParameter);
  EXPECT_EQ(kind_of([] { parse_noise("blur:0.1"); }), ErrorKind::kInvalidParameter);

  EXPECT_FALSE(parse_theta3("auto").fixed.has_value());
  EXPECT_DOUBLE_EQ(*parse_theta3("pi/3").fixed, kPi / 3);

  EXPECT_EQ(parse_state_spec("two_qutrit:pi").d, 3);
  EXPECT_EQ(parse_state_spec("bell:4").schmidt_rank(), 4);
  const auto s = parse_state_spec("schmidt:3,4");
  EXPECT_NEAR(s.coeffs[0], 0.6, 1e-15);
  EXPECT_NEAR(s.coeffs[1], 0.8, 1e-15);
  EXPECT_EQ(kind_of([] { parse_state_spec("three_qutrit:1"); }), ErrorKind::kInvalidParameter);
}

TEST(Config, GridAndValidation) {
  SweepConfig c;
  c.points = 5;
  c.tau_max = kPi;
  const auto g = tau_grid(c);
  ASSERT_EQ(g.size(), 5u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), kPi);
  c.tau = 1.0;
  EXPECT_EQ(tau_grid(c), std::vector<double>{1.0});
  SweepConfig bad;
  bad.points = 1;
  EXPECT_EQ(kind_of([&] { bad.validate(); }), ErrorKind::kInvalidParameter);
  bad = SweepConfig{};
  bad.epsilon = 1.0;
  EXPECT_EQ(kind_of([&] { bad.validate(); }), ErrorKind::kInvalidParameter);
}

TEST(Table, Formatting) {
  EXPECT_EQ(format_number(0.2), "0.2");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
  Table t;
  t.columns = {"a", "b"};
  t.add_row({1.5, std::string("x,y")});
  std::ostringstream os;
  write_csv(t, os);
  EXPECT_EQ(os.str(), "a,b\n1.5,\"x,y\"\n");
  EXPECT_EQ(to_json(t).dump(), R"([{"a":1.5,"b":"x,y"}])");
}

TEST(Cli, SweepVerifyQubitQuarterPi) {
  const auto r = run_cli({"sweep-verify", "--d", "2", "--tau", "pi/4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto csv = parse_csv(r.out);
  EXPECT_EQ(csv.header, (std::vector<std::string>{"tau", "strategy_kind", "alpha", "theta3",
                                                   "beta_basis", "beta_spectral", "n"}));
  ASSERT_EQ(csv.rows.size(), 1u);
  EXPECT_NEAR(csv.numbers("alpha")[0], 0.2, 1e-12);
}

TEST(Cli, SweepVerifyQutritLandmarks) {
  const auto r = run_cli({"sweep-verify", "--d", "3", "--points", "201"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto csv = parse_csv(r.out);
  ASSERT_EQ(csv.rows.size(), 201u);
  const auto n = csv.numbers("n");
  const auto tau = csv.numbers("tau");
  EXPECT_EQ(csv.rows.front()[1], "separable");
  EXPECT_NEAR(tau[100], kPi, 1e-12);
  EXPECT_NEAR(n[100], 695, 6.95);
  EXPECT_NEAR(n[1], 460, 4.6 + 20);  // tau = pi/100 is already off the limit
  for (std::size_t i = 1; i + 1 < n.size(); ++i) EXPECT_LT(n[i], 1000);
  EXPECT_EQ(n.front(), 230);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"dfe-run", "--d", "3", "--points", "3",
                                         "--epsilon", "0.2", "--delta", "0.2",
                                         "--noise", "depol:0.2", "--repeats", "3"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto other = args;
  other.insert(other.end(), {"--seed", "2"});
  EXPECT_NE(run_cli(other).out, a.out);
}

TEST(Cli, CharfuncColumns) {
  const auto r = run_cli({"sweep-charfunc", "--d", "3", "--points", "41"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto csv = parse_csv(r.out);
  for (double v : csv.numbers("chi_0_0")) EXPECT_NEAR(v, 1.0 / 3.0, 1e-11);
  const auto c11 = csv.numbers("chi_1_1");
  const auto c22 = csv.numbers("chi_2_2");
  ASSERT_EQ(c11.size(), 41u);
  for (std::size_t i = 0; i < c11.size(); ++i) EXPECT_NEAR(c22[i], -c11[i], 1e-11);

  const auto q = parse_csv(run_cli({"sweep-charfunc", "--d", "2", "--tau", "pi/4"}).out);
  EXPECT_NEAR(q.numbers("chi_1_1")[0], 0.5, 1e-12);
  EXPECT_NEAR(q.numbers("chi_2_2")[0], -0.5, 1e-12);
}

TEST(Cli, NegativityTrough) {
  const auto r = run_cli({"sweep-negativity", "--d", "3", "--points", "101"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto n = parse_csv(r.out).numbers("negativity");
  ASSERT_EQ(n.size(), 101u);
  EXPECT_NEAR(n[0], 0.0, 1e-12);
  EXPECT_NEAR(n[50], 0.5, 1e-9);
  EXPECT_LT(n[50], n[49]);
  EXPECT_LT(n[50], n[51]);
}

TEST(Cli, DfePlan) {
  const auto r = run_cli({"dfe-plan", "--d", "2", "--tau", "pi/4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto csv = parse_csv(r.out);
  const int label = csv.column("label"), prob = csv.column("prob");
  ASSERT_GE(label, 0);
  bool found = false;
  for (const auto& row : csv.rows) {
    if (row[label] == "0_0") {
      found = true;
      EXPECT_NEAR(std::stod(row[prob]), 0.25, 1e-12);
    }
  }
  EXPECT_TRUE(found);

  const auto q = run_cli({"dfe-plan", "--d", "3", "--points", "9", "--format", "json"});
  ASSERT_EQ(q.code, kExitOk) << q.err;
  const auto j = nlohmann::json::parse(q.out);
  ASSERT_EQ(j.size(), 9u);
  for (const auto& row : j) {
    double total = 0;
    for (const auto& e : row["plan"]["entries"]) total += e["prob"].get<double>();
    EXPECT_NEAR(total, 1.0, 1e-9);
  }
}

TEST(Cli, DfeRunNoiseNoneCoverage) {
  const double eps = 0.1, delta = 0.2;
  const auto r = run_cli({"dfe-run", "--d", "3", "--tau", "2", "--epsilon", "0.1", "--delta",
                          "0.2", "--repeats", "100", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 100u);
  int hits = 0;
  for (const auto& row : j) {
    EXPECT_NEAR(row["true_fidelity"].get<double>(), 1.0, 1e-12);
    hits += std::abs(row["y_tilde"].get<double>() - 1.0) <= 2 * eps;
  }
  EXPECT_GE(hits, (1 - 2 * delta) * 100);
}

TEST(Cli, DfeRunRejectsWeyl) {
  EXPECT_EQ(run_cli({"dfe-run", "--d", "3", "--tau", "1", "--basis", "weyl"}).code, kExitUsage);
}

TEST(Cli, Fidelity) {
  auto r = run_cli({"fidelity", "--a", "two_qutrit:1.2", "--b", "two_qutrit:1.2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "1.000000000000\n");
  r = run_cli({"fidelity", "--a", "two_qutrit:0", "--b", "two_qutrit:pi"});
  EXPECT_EQ(r.out, "0.500000000000\n");
  const auto w = run_cli({"fidelity", "--a", "two_qutrit:0.4", "--b", "schmidt:1,2,2",
                          "--basis", "weyl"});
  const auto s = run_cli({"fidelity", "--a", "two_qutrit:0.4", "--b", "schmidt:1,2,2",
                          "--basis", "sud"});
  EXPECT_EQ(w.out, s.out);
  const auto f = fidelity("two_qubit:0.3", "bell:2", BasisKind::kSud);
  EXPECT_NEAR(f.value, f.direct, 1e-12);
  EXPECT_TRUE(f.violations.empty());

  const auto bad = run_cli({"fidelity", "--a", "nonsense", "--b", "bell:3"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"sweep-verify", "--points", "1"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"sweep-verify", "--epsilon", "2"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"sweep-verify", "--frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"sweep-verify", "--d", "5"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"sweep-verify", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"sweep-verify", "--tau", "1", "--out", "/nonexistent/dir/x.csv"}).code,
            kExitIo);
  EXPECT_EQ(run_cli({"check"}).code, kExitOk);
  EXPECT_EQ(run_cli({"sweep-negativity", "--tau", "1", "--check"}).code, kExitOk);
}

TEST(Cli, OutFileAndConfigFile) {
  const auto out = temp_file("out.csv");
  const auto cfg = temp_file("cfg.ini");
  {
    std::ofstream f(cfg);
    f << "# flat config\nd = 2\ntau = \"pi/4\"\nformat = \"csv\"\n";
  }
  auto r = run_cli({"sweep-verify", "--config", cfg.string(), "--out", out.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  const std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_NEAR(parse_csv(text).numbers("alpha")[0], 0.2, 1e-12);

  // Command-line flags take precedence over the file.
  r = run_cli({"sweep-verify", "--config", cfg.string(), "--tau", "0.3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(parse_csv(r.out).numbers("tau")[0], 0.3, 1e-12);
  std::filesystem::remove(out);
  std::filesystem::remove(cfg);
}

TEST(Cli, SchmidtFileInput) {
  const auto path = temp_file("schmidt.csv");
  {
    std::ofstream f(path);
    f << "tau,c0,c1,c2,c3\n# two rows\n0.1,1,1,1,1\n0.2,0.9,0.3,0.3,0.1\n";
  }
  const auto r = run_cli({"sweep-verify", "--schmidt", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto csv = parse_csv(r.out);
  ASSERT_EQ(csv.rows.size(), 2u);
  EXPECT_EQ(csv.rows[0][1], "qudit_general");
  for (double n : csv.numbers("n")) EXPECT_GT(n, 0);
  std::filesystem::remove(path);
}

TEST(Cli, JsonMirrorsCsv) {
  const auto c = parse_csv(run_cli({"sweep-negativity", "--d", "2", "--points", "5"}).out);
  const auto j = nlohmann::json::parse(
      run_cli({"sweep-negativity", "--d", "2", "--points", "5", "--format", "json"}).out);
  ASSERT_EQ(j.size(), c.rows.size());
  for (std::size_t i = 0; i < c.rows.size(); ++i) {
    EXPECT_NEAR(j[i]["negativity"].get<double>(), std::stod(c.rows[i][1]), 1e-11);
  }
}

TEST(Cli, InvariantSuite) {
  for (const auto& c : invariant_suite()) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

}  // namespace
}  // namespace qsv::cli
