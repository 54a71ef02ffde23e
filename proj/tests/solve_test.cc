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

#include "recsp/solve.h"

#include <vector>

#include "gtest/gtest.h"
#include "recsp/io.h"
#include "test_support.h"

namespace recsp {
namespace {

using testing::MakeInstance;

ErrorCode FailureOf(const Instance& instance, Method method) {
  try {
    DispatchSolve(instance, method);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "solve unexpectedly succeeded";
  return ErrorCode::kInternal;
}

Instance Triangle(int32_t k) {
  return MakeInstance(3, 0, 2, k, {{0, 1, 1, 1, 0}, {0, 2, 1, 1, 0}, {1, 2, 1, 1, 0}});
}

Instance DiamondWithChord() {
  return MakeInstance(4, 0, 3, 1,
                      {{0, 1, 0, 1, 0}, {0, 2, 0, 1, 0}, {1, 3, 0, 1, 0},
                       {2, 3, 0, 1, 0}, {1, 2, 0, 1, 0}});
}

TEST(DispatchSolveTest, ZeroBudgetShortcut) {
  for (Method m : {Method::kAuto, Method::kLayered, Method::kDag, Method::kAsp,
                   Method::kOracle}) {
    const SolutionPair s = DispatchSolve(testing::ParallelPair(0), m);
    EXPECT_EQ(s.total, 7);
    EXPECT_EQ(s.x, s.y);
    EXPECT_EQ(s.x.arcs, (std::vector<ArcId>{0}));
  }
  // The shortcut applies even where the explicit solver would not.
  EXPECT_EQ(DispatchSolve(Triangle(0), Method::kLayered).total, 2);
}

TEST(DispatchSolveTest, AutoPicksTheTreeSolver) {
  EXPECT_EQ(ResolveAuto(testing::ParallelPair(1)), Method::kAsp);
  EXPECT_EQ(DispatchSolve(testing::ParallelPair(1), Method::kAuto).total, 3);
}

TEST(DispatchSolveTest, AutoFallsBackThroughLayeredToDag) {
  // Complete bipartite middle layers: layered but not series-parallel.
  // The diamond with a chord 1->2 is neither.
  const Instance layered_not_sp = MakeInstance(
      6, 0, 5, 1,
      {{0, 1, 0, 0, 0}, {0, 2, 0, 0, 0}, {1, 3, 0, 0, 0}, {1, 4, 0, 0, 0},
       {2, 3, 0, 0, 0}, {2, 4, 0, 0, 0}, {3, 5, 0, 0, 0}, {4, 5, 0, 0, 0}});
  EXPECT_EQ(ResolveAuto(layered_not_sp), Method::kLayered);
  EXPECT_EQ(ResolveAuto(DiamondWithChord()), Method::kDag);
  EXPECT_EQ(DispatchSolve(DiamondWithChord(), Method::kAuto).total,
            testing::BruteForceTotal(DiamondWithChord()));
}

TEST(DispatchSolveTest, ExplicitMethodsDoNotFallBack) {
  EXPECT_EQ(FailureOf(Triangle(1), Method::kLayered), ErrorCode::kNotLayered);
  EXPECT_EQ(FailureOf(DiamondWithChord(), Method::kAsp),
            ErrorCode::kNotSeriesParallel);
  EXPECT_EQ(ParseMethod("dag"), Method::kDag);
  EXPECT_THROW(ParseMethod("fastest"), Error);
}

TEST(DispatchSolveTest, OracleLimitIsTyped) {
  Instance instance = testing::SymmetricDiamond(1);
  try {
    DispatchSolve(instance, Method::kOracle, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooManyPaths);
  }
}

TEST(VerifySolutionTest, AcceptsSolverOutput) {
  const Instance instance = testing::SymmetricDiamond(2);
  const Verdict verdict =
      VerifySolution(instance, DispatchSolve(instance, Method::kAuto));
  EXPECT_TRUE(verdict.accepted) << verdict.reason;
  EXPECT_TRUE(verdict.reason.empty());
}

TEST(VerifySolutionTest, RejectsCostTampering) {
  const Instance instance = testing::SymmetricDiamond(2);
  SolutionPair s = DispatchSolve(instance, Method::kAuto);
  s.total -= 1;
  const Verdict verdict = VerifySolution(instance, s);
  EXPECT_FALSE(verdict.accepted);
  EXPECT_NE(verdict.reason.find("total"), std::string::npos) << verdict.reason;

  SolutionPair first = DispatchSolve(instance, Method::kAuto);
  first.first_stage_cost += 1;
  first.total += 1;
  EXPECT_NE(VerifySolution(instance, first).reason.find("first-stage"),
            std::string::npos);
}

TEST(VerifySolutionTest, RejectsOverBudgetRecovery) {
  const Instance instance = testing::SymmetricDiamond(1);
  SolutionPair s = DispatchSolve(instance, Method::kAuto);
  // Replace Y by the arc-disjoint branch: two new arcs > k = 1.
  s.y.arcs = s.x.arcs == std::vector<ArcId>{0, 1} ? std::vector<ArcId>{2, 3}
                                                  : std::vector<ArcId>{0, 1};
  const Verdict verdict = VerifySolution(instance, s);
  EXPECT_FALSE(verdict.accepted);
  EXPECT_NE(verdict.reason.find("divergence"), std::string::npos) << verdict.reason;
}

TEST(VerifySolutionTest, RejectsBrokenPaths) {
  const Instance instance = testing::SymmetricDiamond(1);
  SolutionPair s = DispatchSolve(instance, Method::kAuto);
  s.x.arcs = {0, 3};
  EXPECT_NE(VerifySolution(instance, s).reason.find("X is not"), std::string::npos);
  s = DispatchSolve(instance, Method::kAuto);
  s.y.arcs = {0, 99};
  EXPECT_NE(VerifySolution(instance, s).reason.find("Y is not"), std::string::npos);
}

TEST(DispatchSolveTest, AutoMatchesOracleAndVerifiesOnCorpus) {
  for (Family family : {Family::kLayered, Family::kDag, Family::kAsp}) {
    for (uint64_t seed = 1; seed <= 80; ++seed) {
      for (int32_t k = 0; k <= 3; ++k) {
        const Instance instance = testing::SmallInstance(family, seed, k);
        const SolutionPair s = DispatchSolve(instance, Method::kAuto);
        ASSERT_EQ(s.total, DispatchSolve(instance, Method::kOracle).total);
        EXPECT_TRUE(VerifySolution(instance, s).accepted);
      }
    }
  }
}

TEST(ExitCodeTest, DistinctPerErrorClass) {
  std::vector<int> codes;
  for (ErrorCode c :
       {ErrorCode::kParse, ErrorCode::kValidation, ErrorCode::kCyclicGraph,
        ErrorCode::kNotLayered, ErrorCode::kNotSeriesParallel,
        ErrorCode::kTooManyPaths, ErrorCode::kInfeasible, ErrorCode::kOverflow,
        ErrorCode::kConfig, ErrorCode::kInternal}) {
    codes.push_back(ExitCodeFor(c));
  }
  codes.push_back(kExitOk);
  codes.push_back(kExitUsage);
  codes.push_back(kExitRejected);
  std::sort(codes.begin(), codes.end());
  EXPECT_EQ(std::adjacent_find(codes.begin(), codes.end()), codes.end());
}

}  // namespace
}  // namespace recsp
