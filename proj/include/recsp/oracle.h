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

#ifndef RECSP_ORACLE_H_
#define RECSP_ORACLE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "recsp/cost_value.h"
#include "recsp/graph.h"
#include "recsp/solution.h"

namespace recsp {

// Exhaustive ground truth for small instances.

inline constexpr int64_t kDefaultPairLimit = 1'000'000;

// All simple source->sink paths in lexicographic arc-id order. Throws
// Error(kTooManyPaths) once more than `limit` paths are found.
std::vector<Path> EnumeratePaths(const MultiDigraph& graph, NodeId source,
                                 NodeId sink, int64_t limit);

// Exact minimum of C(X) + c_upper(Y) over pairs with |Y \ X| <= k. Ties keep
// the lexicographically first X, then Y. Throws Error(kTooManyPaths) when the
// number of path pairs exceeds `pair_limit`.
SolutionPair OracleSolve(const Instance& instance,
                         int64_t pair_limit = kDefaultPairLimit,
                         ExecutionPolicy policy = ExecutionPolicy::kParallel);

// One realization of the second-stage costs, indexed by arc id.
struct Scenario {
  std::vector<int64_t> cost;
};

// Scenario with every arc at nominal + deviation.
Scenario UpperExtremeScenario(const MultiDigraph& graph);

// Throws Error(kValidation) unless every cost lies in its arc's interval.
void ValidateScenario(const MultiDigraph& graph, const Scenario& scenario);

// min over Y with |Y \ X| <= k of the scenario cost of Y.
CostValue RecoveryValue(const Instance& instance, const Path& x,
                        const Scenario& scenario,
                        int64_t path_limit = kDefaultPairLimit);

struct CollapseReport {
  CostValue extreme_value;  // Recovery value at the upper-extreme scenario.
  CostValue upper_cost_recovery;  // min over Y in the neighborhood of c_upper(Y).
  std::vector<CostValue> sampled_values;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Samples scenarios uniformly per arc (seeded) and checks that none beats
// the upper-extreme scenario, and that the extreme scenario attains the
// c_upper recovery value.
CollapseReport ScenarioCollapseCheck(const Instance& instance, const Path& x,
                                     int32_t samples, uint64_t seed,
                                     int64_t path_limit = kDefaultPairLimit);

}  // namespace recsp

#endif  // RECSP_ORACLE_H_
