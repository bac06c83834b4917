// Copyright 2026 The robustcnot Authors
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

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "gtest/gtest.h"
#include "robustcnot/csv.hpp"
#include "robustcnot/pulse.hpp"
#include "run_config.hpp"

using namespace robustcnot;
using robustcnot::cli::RunConfig;

namespace {

namespace fs = std::filesystem;

struct Csv {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

double num(const std::string &s) {
  const auto v = csv::parse_real(s);
  EXPECT_TRUE(v.has_value()) << s;
  return v.value_or(NAN);
}

std::vector<std::string> fields(const std::string &line) {
  std::vector<std::string> out;
  for (auto f : csv::split(line, ',')) out.emplace_back(f);
  return out;
}

Csv parse_csv(const std::string &text) {
  Csv out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      out.comments.push_back(line);
    } else if (out.header.empty()) {
      out.header = fields(line);
    } else {
      out.rows.push_back(fields(line));
    }
  }
  return out;
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string &name) {
  auto dir = fs::temp_directory_path() / "robustcnot_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

int run_cli(const std::string &args) {
  const std::string cmd = std::string("\"") + ROBUSTCNOT_CLI_PATH + "\" " + args + " >" +
                          scratch("stdout.txt").string() + " 2>" + scratch("stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(CliSweepDelta, UncorrectedColumnMatchesClosedFormToPrintedPrecision) {
  RunConfig cfg;
  cfg.command = "sweep-delta";
  cfg.levels = {0};
  const auto csv = parse_csv(cli::cmd_sweep_delta(cfg));
  ASSERT_EQ(csv.header, (std::vector<std::string>{"delta", "level", "error"}));
  ASSERT_EQ(csv.rows.size(), 181u);
  for (const auto &r : csv.rows) {
    const double d = num(r[0]);
    const double e = num(r[2]);
    const double expected = 1 - std::cos(M_PI * d / 4);
    // CSV values carry 10 significant digits
    EXPECT_NEAR(e, expected, 5e-10 * std::abs(expected) + 1e-15) << r[0];
  }
}

TEST(CliSweepDelta, ZeroErrorRowsAreExact) {
  RunConfig cfg;
  cfg.command = "sweep-delta";
  const auto csv = parse_csv(cli::cmd_sweep_delta(cfg));
  int zeros = 0;
  for (const auto &r : csv.rows)
    if (num(r[0]) == 0.0) {
      ++zeros;
      EXPECT_LT(num(r[2]), 1e-14);
    }
  EXPECT_EQ(zeros, 3);
}

TEST(CliSweepDelta, RejectsBeyondCorrectableRangeUnlessAllowed) {
  RunConfig cfg;
  cfg.command = "sweep-delta";
  cfg.delta_max = 1.5;
  EXPECT_THROW(cli::cmd_sweep_delta(cfg), cli::UsageError);
  cfg.allow_beyond = true;
  cfg.levels = {0};
  cfg.delta_points = 5;
  EXPECT_NO_THROW(cli::cmd_sweep_delta(cfg));
  cfg.delta_min = -1.0;
  EXPECT_THROW(cli::cmd_sweep_delta(cfg), cli::UsageError);
}

TEST(CliSweepDelta, ThreadCountDoesNotChangeOutput) {
  RunConfig cfg;
  cfg.command = "sweep-delta";
  cfg.levels = {1, 2};
  cfg.delta_points = 21;
  cfg.threads = 1;
  const auto serial = cli::cmd_sweep_delta(cfg);
  cfg.threads = 0;
  EXPECT_EQ(serial, cli::cmd_sweep_delta(cfg));
  EXPECT_EQ(serial.rfind("# params:", 0), 0u);
}

TEST(CliTable1, ReferenceRows) {
  RunConfig cfg;
  cfg.command = "table1";
  const auto csv = parse_csv(cli::cmd_table1(cfg));
  ASSERT_EQ(csv.rows.size(), 3u);
  const auto col = [&](const std::string &name) {
    for (std::size_t i = 0; i < csv.header.size(); ++i)
      if (csv.header[i] == name) return i;
    ADD_FAILURE() << "missing column " << name;
    return std::size_t{0};
  };
  const std::size_t t2 = col("t_2q_ns");
  EXPECT_NEAR(num(csv.rows[0][t2]), 3.92, 0.005);
  EXPECT_NEAR(num(csv.rows[1][t2]), 35.28, 0.005);
  EXPECT_NEAR(num(csv.rows[2][t2]), 2544.08, 0.005);
  bool inferred = false;
  for (const auto &c : csv.comments) inferred = inferred || c.rfind("# inferred:", 0) == 0;
  EXPECT_TRUE(inferred);
}

TEST(CliCounts, HeaderAndLevels) {
  RunConfig cfg;
  cfg.command = "counts";
  const auto csv = parse_csv(cli::cmd_counts(cfg));
  EXPECT_EQ(csv.header.front(), "level");
  EXPECT_EQ(csv.rows.size(), 3u);
}

TEST(CliMeasurements, ExplicitGrid) {
  RunConfig cfg;
  cfg.command = "measurements";
  cfg.levels = {0, 1};
  cfg.n_list = {156, 444};
  const auto csv = parse_csv(cli::cmd_measurements(cfg));
  ASSERT_EQ(csv.rows.size(), 4u);
  for (const auto &r : csv.rows) {
    EXPECT_TRUE(r[0] == "156" || r[0] == "444");
  }
  cfg.n_list = {60};
  EXPECT_ANY_THROW(cli::cmd_measurements(cfg));
}

TEST(CliBinary, ExitCodes) {
  EXPECT_EQ(run_cli("counts"), 0);
  EXPECT_EQ(run_cli("no-such-command"), 2);
  EXPECT_EQ(run_cli("sweep-delta --levels 7"), 2);
  EXPECT_EQ(run_cli("sweep-delta --delta-min 0.5 --delta-max 0.1"), 2);

  const auto bad = scratch("bad_table.csv");
  std::ofstream(bad) << "separation_nm,J_ueV\n20.0,0.1\nnot-a-number,0.2\n";
  EXPECT_EQ(run_cli("sweep-separation --exchange-table " + bad.string()), 3);
  EXPECT_NE(slurp(scratch("stderr.txt")).find("bad_table.csv:3:"), std::string::npos);

  EXPECT_EQ(run_cli("table1 --nr 4"), 4);
}

TEST(CliBinary, DumpedSequenceRoundTrips) {
  const auto seq = scratch("cnot_l1.seq");
  ASSERT_EQ(run_cli("sweep-delta --levels 0,1 --points 3 --dump-seq " + seq.string()), 0);
  const auto parsed = pulse::parse_text(slurp(seq), seq.string());
  EXPECT_EQ(parsed, pulse::build_cnot(1));
}

TEST(CliBinary, ConfigFileFlagsTakePrecedence) {
  const auto conf = scratch("run.conf");
  std::ofstream(conf) << "levels=0\npoints=5\ndelta-min=-0.4\ndelta-max=0.4\n";
  ASSERT_EQ(run_cli("sweep-delta --config " + conf.string()), 0);
  auto csv = parse_csv(slurp(scratch("stdout.txt")));
  ASSERT_EQ(csv.rows.size(), 5u);
  EXPECT_EQ(csv.rows.front()[0], "-0.4");

  ASSERT_EQ(run_cli("sweep-delta --config " + conf.string() + " --points 3"), 0);
  csv = parse_csv(slurp(scratch("stdout.txt")));
  EXPECT_EQ(csv.rows.size(), 3u);
}

TEST(CliBinary, OutputIsByteIdenticalAcrossRuns) {
  const auto a = scratch("a.csv");
  const auto b = scratch("b.csv");
  ASSERT_EQ(run_cli("sweep-separation --out " + a.string()), 0);
  ASSERT_EQ(run_cli("sweep-separation --threads 1 --out " + b.string()), 0);
  EXPECT_EQ(slurp(a), slurp(b));
}
