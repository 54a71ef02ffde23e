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

#include "recsp/oracle.h"

#include <exception>
#include <string>
#include <utility>

#include "recsp/error.h"
#include "recsp/random.h"

namespace recsp {

std::vector<Path> EnumeratePaths(const MultiDigraph& graph, NodeId source,
                                 NodeId sink, int64_t limit) {
  TopologicalOrder(graph);  // Rejects cyclic input.
  const std::vector<bool> reaches_sink = BackwardReachable(graph, sink);
  std::vector<Path> paths;
  if (!reaches_sink[source] || source == sink) return paths;

  // Depth-first over out-arcs in id order gives lexicographic output.
  struct Frame {
    NodeId node;
    size_t next;
  };
  std::vector<Frame> stack{{source, 0}};
  Path current;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto out = graph.out_arcs(top.node);
    if (top.next == out.size()) {
      stack.pop_back();
      if (!current.arcs.empty()) current.arcs.pop_back();
      continue;
    }
    const ArcId a = out[top.next++];
    const NodeId head = graph.arc(a).head;
    if (!reaches_sink[head]) continue;
    current.arcs.push_back(a);
    if (head == sink) {
      if (static_cast<int64_t>(paths.size()) >= limit) {
        throw Error(ErrorCode::kTooManyPaths,
                    "more than " + std::to_string(limit) + " s-t paths");
      }
      paths.push_back(current);
      current.arcs.pop_back();
      continue;
    }
    stack.push_back({head, 0});
  }
  return paths;
}

SolutionPair OracleSolve(const Instance& instance, int64_t pair_limit,
                         ExecutionPolicy policy) {
  const MultiDigraph& g = instance.graph;
  const std::vector<Path> paths =
      EnumeratePaths(g, instance.source, instance.sink, pair_limit);
  const int64_t count = static_cast<int64_t>(paths.size());
  if (count == 0) throw Error(ErrorCode::kInfeasible, "no source-sink path");
  if (count > pair_limit / count) {
    throw Error(ErrorCode::kTooManyPaths,
                std::to_string(count) + " paths give too many pairs");
  }

  std::vector<CostValue> first(count);
  std::vector<CostValue> upper(count);
  for (int64_t p = 0; p < count; ++p) {
    first[p] = PathCost(g, paths[p], CostSelector::kFirst);
    upper[p] = PathCost(g, paths[p], CostSelector::kUpper);
  }

  // Per X: best recovery partner. Reduced afterwards in X order.
  std::vector<CostValue> best_value(count, CostValue::Infinity());
  std::vector<int64_t> best_y(count, -1);
  std::vector<std::exception_ptr> errors(count);
  auto scan = [&](int64_t xi, std::vector<char>& in_x) {
    for (ArcId a : paths[xi].arcs) in_x[a] = 1;
    for (int64_t yi = 0; yi < count; ++yi) {
      int32_t divergence = 0;
      for (ArcId a : paths[yi].arcs) divergence += in_x[a] ? 0 : 1;
      if (divergence > instance.k) continue;
      const CostValue value = first[xi] + upper[yi];
      if (value < best_value[xi]) {
        best_value[xi] = value;
        best_y[xi] = yi;
      }
    }
    for (ArcId a : paths[xi].arcs) in_x[a] = 0;
  };

  if (policy == ExecutionPolicy::kParallel) {
#pragma omp parallel
    {
      std::vector<char> in_x(g.arc_count(), 0);
#pragma omp for schedule(dynamic, 16)
      for (int64_t xi = 0; xi < count; ++xi) {
        try {
          scan(xi, in_x);
        } catch (...) {
          errors[xi] = std::current_exception();
        }
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  } else {
    std::vector<char> in_x(g.arc_count(), 0);
    for (int64_t xi = 0; xi < count; ++xi) scan(xi, in_x);
  }

  int64_t chosen = -1;
  for (int64_t xi = 0; xi < count; ++xi) {
    if (best_y[xi] >= 0 && (chosen < 0 || best_value[xi] < best_value[chosen])) {
      chosen = xi;
    }
  }
  return MakeSolutionPair(g, paths[chosen], paths[best_y[chosen]]);
}

Scenario UpperExtremeScenario(const MultiDigraph& graph) {
  Scenario scenario;
  scenario.cost.reserve(graph.arc_count());
  for (const Arc& a : graph.arcs()) scenario.cost.push_back(a.upper_cost().value());
  return scenario;
}

void ValidateScenario(const MultiDigraph& graph, const Scenario& scenario) {
  if (static_cast<int32_t>(scenario.cost.size()) != graph.arc_count()) {
    throw Error(ErrorCode::kValidation, "scenario size differs from arc count");
  }
  for (const Arc& a : graph.arcs()) {
    const int64_t c = scenario.cost[a.id];
    if (c < a.nominal || CostValue(c) > a.upper_cost()) {
      throw Error(ErrorCode::kValidation,
                  "scenario cost of arc " + std::to_string(a.id) +
                      " outside its interval");
    }
  }
}

namespace {

template <typename CostOf>
CostValue BestRecovery(const Instance& instance, const Path& x,
                       int64_t path_limit, CostOf cost_of) {
  if (!IsSimplePath(instance.graph, x, instance.source, instance.sink)) {
    throw Error(ErrorCode::kValidation, "first-stage path is not an s-t path");
  }
  CostValue best = CostValue::Infinity();
  for (const Path& y : EnumeratePaths(instance.graph, instance.source,
                                      instance.sink, path_limit)) {
    if (DivergenceCount(y, x) > instance.k) continue;
    CostValue value = 0;
    for (ArcId a : y.arcs) value += cost_of(a);
    best = Min(best, value);
  }
  return best;
}

}  // namespace

CostValue RecoveryValue(const Instance& instance, const Path& x,
                        const Scenario& scenario, int64_t path_limit) {
  ValidateScenario(instance.graph, scenario);
  return BestRecovery(instance, x, path_limit,
                      [&](ArcId a) { return CostValue(scenario.cost[a]); });
}

CollapseReport ScenarioCollapseCheck(const Instance& instance, const Path& x,
                                     int32_t samples, uint64_t seed,
                                     int64_t path_limit) {
  const MultiDigraph& g = instance.graph;
  CollapseReport report;
  report.extreme_value =
      RecoveryValue(instance, x, UpperExtremeScenario(g), path_limit);
  report.upper_cost_recovery = BestRecovery(
      instance, x, path_limit, [&](ArcId a) { return g.arc(a).upper_cost(); });
  if (report.extreme_value != report.upper_cost_recovery) {
    report.violations.push_back("extreme scenario does not attain the c_upper "
                                "recovery value");
  }

  SplitMix64 rng(seed);
  Scenario scenario;
  scenario.cost.resize(g.arc_count());
  for (int32_t s = 0; s < samples; ++s) {
    for (const Arc& a : g.arcs()) {
      scenario.cost[a.id] = a.nominal + rng.Uniform(0, a.deviation);
    }
    const CostValue value = RecoveryValue(instance, x, scenario, path_limit);
    report.sampled_values.push_back(value);
    if (value > report.extreme_value) {
      report.violations.push_back("sample " + std::to_string(s) +
                                  " exceeds the extreme recovery value");
    }
  }
  return report;
}

}  // namespace recsp
