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

// Acceptance gate. Each criterion prints exactly one line, "PASS <n> ..." or
// "FAIL <n> ...", and the process exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "recsp/asp.h"
#include "recsp/error.h"
#include "recsp/graph.h"
#include "recsp/io.h"
#include "recsp/oracle.h"
#include "recsp/reduction.h"
#include "recsp/solve.h"
#include "test_support.h"

namespace recsp {
namespace {

constexpr Family kFamilies[] = {Family::kLayered, Family::kDag, Family::kAsp};

// Collects the first few failure descriptions of one criterion.
class Findings {
 public:
  void Add(const std::string& message) {
    ++count_;
    if (first_.size() < 3) first_.push_back(message);
  }
  int count() const { return count_; }
  std::string Summary() const {
    std::ostringstream os;
    os << count_ << " failure(s)";
    for (const std::string& m : first_) os << "; " << m;
    return os.str();
  }

 private:
  int count_ = 0;
  std::vector<std::string> first_;
};

std::string Where(Family family, uint64_t seed, int32_t k) {
  std::ostringstream os;
  os << FamilyName(family) << " seed " << seed << " k " << k;
  return os.str();
}

// Runs one explicit method. Structural rejections mean "not applicable".
std::optional<int64_t> TryMethod(const Instance& instance, Method method) {
  try {
    return DispatchSolve(instance, method).total;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNotLayered ||
        e.code() == ErrorCode::kNotSeriesParallel) {
      return std::nullopt;
    }
    throw;
  }
}

bool Report(int id, const std::string& title, const std::string& detail,
            bool pass) {
  std::printf("%s %d %s: %s\n", pass ? "PASS" : "FAIL", id, title.c_str(),
              detail.c_str());
  std::fflush(stdout);
  return pass;
}

// Runs a criterion body; an escaping exception is a failure of that criterion.
bool Run(int id, const std::string& title,
         const std::function<std::pair<bool, std::string>()>& body) {
  try {
    const auto [pass, detail] = body();
    return Report(id, title, detail, pass);
  } catch (const std::exception& e) {
    return Report(id, title, std::string("exception: ") + e.what(), false);
  }
}

std::pair<bool, std::string> OracleEquivalence() {
  Findings findings;
  int solver_runs = 0;
  for (Family family : kFamilies) {
    for (uint64_t seed = 1; seed <= 300; ++seed) {
      const int32_t k = static_cast<int32_t>(1 + seed % 3);
      const Instance instance = testing::SmallInstance(family, seed, k);
      const int64_t oracle = OracleSolve(instance).total;
      const std::optional<int64_t> brute = testing::BruteForceTotal(instance);
      if (!brute || *brute != oracle) {
        findings.Add("oracle disagrees with brute force at " +
                     Where(family, seed, k));
      }
      for (Method m : {Method::kLayered, Method::kDag, Method::kAsp}) {
        const std::optional<int64_t> total = TryMethod(instance, m);
        if (!total) continue;
        ++solver_runs;
        if (*total != oracle) {
          findings.Add(std::string(MethodName(m)) + " at " +
                       Where(family, seed, k));
        }
      }
    }
  }
  return {findings.count() == 0,
          "900 instances, " + std::to_string(solver_runs) + " solver runs, " +
              findings.Summary()};
}

std::pair<bool, std::string> CrossSolverAgreement() {
  Findings findings;
  for (uint64_t seed = 1; seed <= 300; ++seed) {
    const int32_t k = static_cast<int32_t>(1 + seed % 3);
    const Instance asp = testing::SmallInstance(Family::kAsp, seed, k);
    if (SolveAsp(asp).total != SolveDag(asp).total) {
      findings.Add("asp vs dag at " + Where(Family::kAsp, seed, k));
    }
    const Instance layered = testing::SmallInstance(Family::kLayered, seed, k);
    if (SolveLayered(layered).total != SolveDag(layered).total) {
      findings.Add("layered vs dag at " + Where(Family::kLayered, seed, k));
    }
  }
  return {findings.count() == 0, "600 comparisons, " + findings.Summary()};
}

std::pair<bool, std::string> ZeroBudgetShortcut() {
  Findings findings;
  for (Family family : kFamilies) {
    for (uint64_t seed = 1; seed <= 300; ++seed) {
      const Instance instance = testing::SmallInstance(family, seed, 0);
      const ShortestPathTree tree = DagShortestPaths(
          instance.graph, CostSelector::kCombined, instance.source);
      const CostValue expected = tree.distance[instance.sink];
      for (Method m : {Method::kAuto, Method::kLayered, Method::kDag,
                       Method::kAsp, Method::kOracle}) {
        const SolutionPair s = DispatchSolve(instance, m);
        if (expected != CostValue(s.total) || s.x != s.y) {
          findings.Add(std::string(MethodName(m)) + " at " +
                       Where(family, seed, 0));
        }
      }
    }
  }
  return {findings.count() == 0, "900 instances x 5 methods, " + findings.Summary()};
}

std::pair<bool, std::string> ScenarioCollapse() {
  Findings findings;
  int64_t scenarios = 0;
  for (int i = 0; i < 50; ++i) {
    const Family family = kFamilies[i % 3];
    const uint64_t seed = 1000 + i;
    const int32_t k = 1 + i % 3;
    const Instance instance = testing::SmallInstance(family, seed, k);
    const SolutionPair best = DispatchSolve(instance, Method::kAuto);
    const CollapseReport report =
        ScenarioCollapseCheck(instance, best.x, 20, seed);
    scenarios += static_cast<int64_t>(report.sampled_values.size());
    for (const std::string& v : report.violations) {
      findings.Add(v + " at " + Where(family, seed, k));
    }
    // The extreme recovery value completes the optimal total.
    if (CostValue(best.first_stage_cost) + report.extreme_value !=
        CostValue(best.total)) {
      findings.Add("extreme value does not complete the total at " +
                   Where(family, seed, k));
    }
  }
  return {findings.count() == 0 && scenarios == 1000,
          std::to_string(scenarios) + " scenarios, " + findings.Summary()};
}

std::pair<bool, std::string> MicroInstances() {
  const int64_t pair1 = DispatchSolve(testing::ParallelPair(1), Method::kAuto).total;
  const int64_t pair0 = DispatchSolve(testing::ParallelPair(0), Method::kAuto).total;
  const int64_t diamond2 =
      DispatchSolve(testing::SymmetricDiamond(2), Method::kAuto).total;
  const int64_t diamond1 =
      DispatchSolve(testing::SymmetricDiamond(1), Method::kAuto).total;
  std::ostringstream os;
  os << "parallel pair k=1 " << pair1 << " k=0 " << pair0
     << ", diamond k=2 " << diamond2 << " k=1 " << diamond1;
  return {pair1 == 3 && pair0 == 7 && diamond2 == 0 && diamond1 == 20, os.str()};
}

std::pair<bool, std::string> AspArrays() {
  Findings findings;
  int infinite_entries = 0;
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    GeneratorConfig config;
    config.family = Family::kAsp;
    config.seed = 5000 + seed;
    config.node_count = 2 + static_cast<int32_t>(seed % 6);
    config.arc_count = 1 + static_cast<int32_t>(seed % 8);
    config.first = {-5, 15};
    config.nominal = {-3, 15};
    config.deviation = {0, 8};
    config.k = 0;
    Instance instance = Generate(config);
    instance.k = static_cast<int32_t>(seed % 4);
    const std::optional<DecompositionTree> tree = BuildDecompositionTree(instance);
    if (!tree) {
      findings.Add("not recognized at seed " + std::to_string(seed));
      continue;
    }
    const AspNodeData root = EvaluateRoot(instance, *tree);
    const testing::BruteArrays expected = testing::BruteForceArrays(instance);
    if (root.c_first != expected.c_first || root.c_upper != expected.c_upper ||
        root.c_opt != expected.c_opt) {
      findings.Add("array mismatch at seed " + std::to_string(seed));
    }
    for (const CostValue& v : expected.c_opt) infinite_entries += v.is_infinite();
  }
  return {findings.count() == 0,
          "100 trees, " + std::to_string(infinite_entries) +
              " infinite c_opt entries, " + findings.Summary()};
}

std::pair<bool, std::string> CertificateVerification() {
  Findings findings;
  int accepted = 0;
  int rejected = 0;
  for (Family family : kFamilies) {
    for (uint64_t seed = 1; seed <= 100; ++seed) {
      const int32_t k = static_cast<int32_t>(1 + seed % 3);
      const Instance instance = testing::SmallInstance(family, seed, k);
      const std::string where = Where(family, seed, k);
      for (Method m : {Method::kLayered, Method::kDag, Method::kAsp,
                       Method::kOracle}) {
        SolutionPair s;
        try {
          s = DispatchSolve(instance, m);
        } catch (const Error& e) {
          if (e.code() == ErrorCode::kNotLayered ||
              e.code() == ErrorCode::kNotSeriesParallel) {
            continue;
          }
          throw;
        }
        if (VerifySolution(instance, s).accepted) {
          ++accepted;
        } else {
          findings.Add(std::string(MethodName(m)) + " output rejected at " + where);
        }
        for (int64_t delta : {-1, 1}) {
          SolutionPair mutated = s;
          mutated.total += delta;
          if (VerifySolution(instance, mutated).accepted) {
            findings.Add("total mutation accepted at " + where);
          } else {
            ++rejected;
          }
        }
      }
      // Swap Y for the first path outside the neighborhood, with every stated
      // figure recomputed so that only the budget is violated.
      const SolutionPair s = DispatchSolve(instance, Method::kAuto);
      for (const Path& y : EnumeratePaths(instance.graph, instance.source,
                                          instance.sink, kDefaultPairLimit)) {
        if (DivergenceCount(y, s.x) <= instance.k) continue;
        const SolutionPair mutated = MakeSolutionPair(instance.graph, s.x, y);
        if (VerifySolution(instance, mutated).accepted) {
          findings.Add("over-budget Y accepted at " + where);
        } else {
          ++rejected;
        }
        break;
      }
    }
  }
  return {findings.count() == 0, std::to_string(accepted) + " accepted, " +
                                     std::to_string(rejected) +
                                     " mutations rejected, " + findings.Summary()};
}

Instance LargeAsp(int32_t arcs, uint64_t seed) {
  GeneratorConfig config;
  config.family = Family::kAsp;
  config.seed = seed;
  config.arc_count = arcs;
  config.node_count = arcs / 2;
  config.k = 50;
  return Generate(config);
}

double SolveSeconds(const Instance& instance) {
  const auto start = std::chrono::steady_clock::now();
  const SolutionPair s = SolveAsp(instance);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  if (s.divergence > instance.k) throw Error(ErrorCode::kInternal, "bad pair");
  return elapsed.count();
}

std::pair<bool, std::string> ComplexitySmoke() {
  const Instance base = LargeAsp(100000, 77);
  const Instance doubled = LargeAsp(200000, 77);
  // Runs alternate between the two sizes so that machine noise hits both;
  // each size keeps its fastest run.
  double t1 = 1e300;
  double t2 = 1e300;
  for (int r = 0; r < 5; ++r) {
    t1 = std::min(t1, SolveSeconds(base));
    t2 = std::min(t2, SolveSeconds(doubled));
  }
  const double ratio = t2 / std::max(t1, 1e-9);
  std::ostringstream os;
  os << "|A|=" << base.graph.arc_count() << " k=50 " << t1 << " s, |A|="
     << doubled.graph.arc_count() << " " << t2 << " s, ratio " << ratio;
  return {t1 < 10.0 && ratio <= 3.0, os.str()};
}

std::pair<bool, std::string> Monotonicity() {
  Findings findings;
  for (int i = 0; i < 100; ++i) {
    const Family family = kFamilies[i % 3];
    const uint64_t seed = 2000 + i;
    Instance instance = testing::SmallInstance(family, seed, 4);
    std::optional<int64_t> previous_oracle;
    std::optional<int64_t> previous_solver;
    for (int32_t k = 0; k <= 4; ++k) {
      instance.k = k;
      const int64_t oracle = DispatchSolve(instance, Method::kOracle).total;
      const int64_t solver = DispatchSolve(instance, Method::kAuto).total;
      if (oracle != solver) findings.Add("solver != oracle at " + Where(family, seed, k));
      if (previous_oracle && oracle > *previous_oracle) {
        findings.Add("oracle increases at " + Where(family, seed, k));
      }
      if (previous_solver && solver > *previous_solver) {
        findings.Add("solver increases at " + Where(family, seed, k));
      }
      previous_oracle = oracle;
      previous_solver = solver;
    }
  }
  return {findings.count() == 0, "100 instances x k=0..4, " + findings.Summary()};
}

}  // namespace
}  // namespace recsp

int main() {
  using namespace recsp;
  bool all = true;
  all &= Run(1, "oracle equivalence", OracleEquivalence);
  all &= Run(2, "cross-solver agreement", CrossSolverAgreement);
  all &= Run(3, "k=0 shortcut", ZeroBudgetShortcut);
  all &= Run(4, "scenario collapse", ScenarioCollapse);
  all &= Run(5, "micro-instance regression", MicroInstances);
  all &= Run(6, "ASP array correctness", AspArrays);
  all &= Run(7, "certificate verification", CertificateVerification);
  all &= Run(8, "complexity smoke", ComplexitySmoke);
  all &= Run(9, "monotonicity", Monotonicity);
  return all ? 0 : 1;
}
