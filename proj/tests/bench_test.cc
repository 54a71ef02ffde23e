// Copyright 2026 The recsp Authors.
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

#include "recsp/bench.h"

#include <sstream>
#include <string>

#include "gtest/gtest.h"

namespace recsp {
namespace {

constexpr char kHeader[] = "family,n,m,k,method,total,time_ms,agreement\n";

TEST(BenchTest, EmptySuiteHasOnlyTheHeader) {
  EXPECT_EQ(BenchCsv(BenchRun({})), kHeader);
}

TEST(BenchTest, SmallSizesAgreeWithTheOracle) {
  BenchCase asp;
  asp.family = Family::kAsp;
  asp.sizes = {6, 10, 14};
  asp.k = 2;
  asp.methods = {Method::kAsp, Method::kDag};
  BenchCase layered;
  layered.family = Family::kLayered;
  layered.sizes = {8, 12};
  layered.k = 2;
  const std::vector<BenchRow> rows = BenchRun({asp, layered});
  ASSERT_EQ(rows.size(), 3u * 2 + 2u * 2);
  for (const BenchRow& row : rows) {
    EXPECT_EQ(row.agreement, "ok") << row.family << " " << row.method;
    EXPECT_TRUE(row.total.has_value());
    EXPECT_GE(row.time_ms, 0.0);
  }
}

TEST(BenchTest, FailuresAreRecordedPerRow) {
  BenchCase dag;
  dag.family = Family::kDag;
  dag.sizes = {12};
  dag.k = 2;
  dag.methods = {Method::kAsp, Method::kDag};
  const std::vector<BenchRow> rows = BenchRun({dag});
  ASSERT_EQ(rows.size(), 2u);
  // A random dag of this size is almost never series-parallel; either way the
  // row must not abort the suite.
  if (!rows[0].total) EXPECT_EQ(rows[0].agreement.rfind("error: ", 0), 0u);
  EXPECT_EQ(rows[1].agreement, "ok");

  const std::string csv = BenchCsv(rows);
  std::istringstream lines(csv);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 7) << line;
    ++count;
  }
  EXPECT_EQ(count, 3);
}

TEST(BenchTest, AspRowsGrowWithSize) {
  BenchCase asp;
  asp.family = Family::kAsp;
  asp.sizes = {1000, 10000};
  asp.k = 16;
  const std::vector<BenchRow> rows = BenchRun({asp});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].m, 1000);
  EXPECT_EQ(rows[1].m, 10000);
  // Above the oracle size cap the first successful method is the reference.
  for (const BenchRow& row : rows) {
    EXPECT_EQ(row.agreement, "ok");
    EXPECT_TRUE(row.total.has_value());
  }
}

}  // namespace
}  // namespace recsp
