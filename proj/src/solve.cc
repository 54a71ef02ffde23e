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

#include <string>

#include "recsp/asp.h"
#include "recsp/reduction.h"

namespace recsp {

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kAuto:
      return "auto";
    case Method::kLayered:
      return "layered";
    case Method::kDag:
      return "dag";
    case Method::kAsp:
      return "asp";
    case Method::kOracle:
      return "oracle";
  }
  return "unknown";
}

Method ParseMethod(std::string_view name) {
  for (Method m : {Method::kAuto, Method::kLayered, Method::kDag, Method::kAsp,
                   Method::kOracle}) {
    if (MethodName(m) == name) return m;
  }
  throw Error(ErrorCode::kConfig, "unknown method '" + std::string(name) + "'");
}

Method ResolveAuto(const Instance& instance) {
  if (BuildDecompositionTree(instance)) return Method::kAsp;
  if (ComputeLayering(instance)) return Method::kLayered;
  return Method::kDag;
}

SolutionPair DispatchSolve(const Instance& instance, Method method,
                           int64_t oracle_limit) {
  if (instance.k == 0) {
    const ShortestPathTree tree =
        DagShortestPaths(instance.graph, CostSelector::kCombined, instance.source);
    if (tree.distance[instance.sink].is_infinite()) {
      throw Error(ErrorCode::kInfeasible, "sink not reachable from source");
    }
    Path path = tree.PathTo(instance.graph, instance.sink);
    return MakeSolutionPair(instance.graph, path, path);
  }
  if (method == Method::kAuto) method = ResolveAuto(instance);
  switch (method) {
    case Method::kLayered:
      return SolveLayered(instance);
    case Method::kDag:
      return SolveDag(instance);
    case Method::kAsp:
      return SolveAsp(instance);
    case Method::kOracle:
      return OracleSolve(instance, oracle_limit);
    case Method::kAuto:
      break;
  }
  throw Error(ErrorCode::kInternal, "unresolved method");
}

Verdict VerifySolution(const Instance& instance, const SolutionPair& claimed) {
  const MultiDigraph& g = instance.graph;
  auto reject = [](std::string reason) { return Verdict{false, std::move(reason)}; };
  if (!IsSimplePath(g, claimed.x, instance.source, instance.sink)) {
    return reject("X is not a simple source-sink path");
  }
  if (!IsSimplePath(g, claimed.y, instance.source, instance.sink)) {
    return reject("Y is not a simple source-sink path");
  }
  const int32_t divergence = DivergenceCount(claimed.y, claimed.x);
  if (divergence > instance.k) {
    return reject("divergence " + std::to_string(divergence) + " exceeds k=" +
                  std::to_string(instance.k));
  }
  if (divergence != claimed.divergence) {
    return reject("divergence mismatch: claimed " +
                  std::to_string(claimed.divergence) + ", actual " +
                  std::to_string(divergence));
  }
  const CostValue first = PathCost(g, claimed.x, CostSelector::kFirst);
  if (first != CostValue(claimed.first_stage_cost)) {
    return reject("first-stage cost mismatch: claimed " +
                  std::to_string(claimed.first_stage_cost));
  }
  const CostValue second = PathCost(g, claimed.y, CostSelector::kUpper);
  if (second != CostValue(claimed.second_stage_cost)) {
    return reject("second-stage cost mismatch: claimed " +
                  std::to_string(claimed.second_stage_cost));
  }
  if (first + second != CostValue(claimed.total)) {
    return reject("total cost mismatch: claimed " +
                  std::to_string(claimed.total));
  }
  return Verdict{true, ""};
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
      return 2;
    case ErrorCode::kValidation:
      return 3;
    case ErrorCode::kCyclicGraph:
      return 4;
    case ErrorCode::kNotLayered:
      return 5;
    case ErrorCode::kNotSeriesParallel:
      return 6;
    case ErrorCode::kTooManyPaths:
      return 7;
    case ErrorCode::kInfeasible:
      return 8;
    case ErrorCode::kOverflow:
      return 9;
    case ErrorCode::kConfig:
      return 10;
    case ErrorCode::kInternal:
      return 11;
  }
  return 11;
}

}  // namespace recsp
