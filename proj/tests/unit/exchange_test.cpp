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

#include "robustcnot/exchange.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gtest/gtest.h"
#include "robustcnot/errors.hpp"

using namespace robustcnot;
using namespace robustcnot::xchg;

namespace {

const std::string kSamplePath = std::string(ROBUSTCNOT_DATA_DIR) + "/exchange_100_sample.csv";

ExchangeTable parse(const std::string &text, std::optional<double> target = std::nullopt) {
  std::istringstream in(text);
  return parse_table(in, "<test>", target);
}

std::size_t failing_line(const std::string &text) {
  try {
    parse(text);
  } catch (const FormatError &e) {
    return e.line();
  }
  return 999;
}

}  // namespace

TEST(ExchangeTable, BundledSampleMatchesBuiltin) {
  const auto t = load_table(kSamplePath);
  EXPECT_EQ(t, sample_table());
  EXPECT_DOUBLE_EQ(t.j0(), 0.132);
  EXPECT_EQ(t.direction, "[100]");
}

TEST(ExchangeTable, OneSiteRowIsAnchored) {
  const auto t = sample_table();
  const auto &row = t.rows[t.target_index() + 1];
  EXPECT_DOUBLE_EQ(row.separation_nm, 21.72);
  EXPECT_NEAR(delta0(row.j_ueV, t.j0()), -0.49, 1e-3);
}

TEST(ExchangeTable, RejectsNonPositiveCoupling) {
  EXPECT_EQ(failing_line("separation_nm,J_ueV,tag\n1,0.1,target\n2,0,fixture\n"), 3u);
  EXPECT_EQ(failing_line("separation_nm,J_ueV,tag\n1,0.1,target\n2,-0.2,fixture\n"), 3u);
}

TEST(ExchangeTable, RejectsUnsortedAndDuplicateRows) {
  EXPECT_EQ(failing_line("separation_nm,J_ueV,tag\n2,0.1,target\n1,0.2,fixture\n"), 3u);
  EXPECT_EQ(failing_line("# note\nseparation_nm,J_ueV,tag\n1,0.1,target\n1,0.2,fixture\n"), 4u);
}

TEST(ExchangeTable, RejectsMalformedInput) {
  EXPECT_EQ(failing_line("sep,J\n1,0.1\n"), 1u);
  EXPECT_EQ(failing_line("separation_nm,J_ueV\n1,abc\n"), 2u);
  EXPECT_EQ(failing_line("separation_nm,J_ueV\n1,0.1,extra\n"), 2u);
  EXPECT_THROW(parse("separation_nm,J_ueV,tag\n1,0.1,target\n"), FormatError);  // one row
  EXPECT_THROW(load_table("/definitely/not/here.csv"), FormatError);
}

TEST(ExchangeTable, TargetMustMatchARow) {
  const std::string body = "separation_nm,J_ueV\n1,0.1\n2,0.2\n";
  EXPECT_THROW(parse(body), FormatError);
  EXPECT_THROW(parse(body, 1.5), FormatError);
  EXPECT_DOUBLE_EQ(parse(body, 2.0).j0(), 0.2);
}

TEST(ExchangeTable, WriteThenLoadIsExact) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> step(1e-3, 2.0), j(1e-6, 10.0);
  for (int k = 0; k < 50; ++k) {
    ExchangeTable t;
    t.direction = k % 2 ? "[110]" : "";
    t.bias = k % 3 ? "" : "V=1";
    double sep = step(rng) * 10;
    const int n = 2 + k % 7;
    for (int i = 0; i < n; ++i) {
      t.rows.push_back({sep, j(rng), i == 1 ? "target" : (i % 2 ? "fixture" : "")});
      sep += step(rng);
    }
    t.target_separation_nm = t.rows[k % n].separation_nm;
    std::ostringstream out;
    write_table(out, t);
    EXPECT_EQ(parse(out.str()), t);
  }
}

TEST(Delta0, Examples) {
  EXPECT_EQ(delta0(0.132, 0.132), 0.0);
  EXPECT_DOUBLE_EQ(delta0(0.264, 0.132), 1.0);
  EXPECT_NEAR(delta0(0.51 * 0.132, 0.132), -0.49, 1e-12);
  EXPECT_THROW(delta0(1.0, 0.0), std::invalid_argument);
}

TEST(Delta0, MonotoneInCoupling) {
  double prev = -1.0;
  for (int k = 1; k < 200; ++k) {
    const double d = delta0(0.01 * k, 0.132);
    EXPECT_GT(d, prev);
    prev = d;
  }
}

TEST(FidelityVsSeparation, TargetRowIsExact) {
  const auto t = sample_table();
  for (int level : {0, 1, 2}) {
    const auto pts = fidelity_vs_separation(t, level, 8);
    ASSERT_EQ(pts.size(), t.rows.size());
    EXPECT_LT(pts[t.target_index()].error, 1e-12);
    EXPECT_EQ(pts[t.target_index()].delta0, 0.0);
  }
}

TEST(FidelityVsSeparation, OneSiteLadder) {
  const auto t = sample_table();
  const std::size_t row = t.target_index() + 1;
  EXPECT_NEAR(fidelity_vs_separation(t, 0, 8)[row].error, 0.0731, 5e-4);
  EXPECT_LE(fidelity_vs_separation(t, 1, 8)[row].error, 0.01);
  EXPECT_LT(fidelity_vs_separation(t, 2, 8)[row].error, 1e-4);
}

TEST(FidelityVsSeparation, CorrectionOnlyHelpsInsideRange) {
  const auto t = sample_table();
  const auto l0 = fidelity_vs_separation(t, 0, 8), l1 = fidelity_vs_separation(t, 1, 8);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (std::abs(l0[i].delta0) < 1.0)
      EXPECT_LE(l1[i].error, l0[i].error + 1e-15) << i;
    else if (l0[i].delta0 > 1.0)
      EXPECT_GT(l1[i].error, l0[i].error) << i;
  }
  // at J = 2 J0 every level sits on the same point
  const std::size_t edge = t.target_index() - 1;
  ASSERT_DOUBLE_EQ(l0[edge].delta0, 1.0);
  EXPECT_NEAR(l1[edge].error, l0[edge].error, 1e-12);
}

TEST(FidelityVsSeparation, OnlyCouplingRatiosMatter) {
  auto t = sample_table();
  const auto before = fidelity_vs_separation(t, 1, 8);
  for (auto &r : t.rows) r.j_ueV *= 3.7;
  const auto after = fidelity_vs_separation(t, 1, 8);
  for (std::size_t i = 0; i < before.size(); ++i) {
    EXPECT_NEAR(after[i].delta0, before[i].delta0, 1e-12);
    EXPECT_NEAR(after[i].error, before[i].error, 1e-12);
  }
}
