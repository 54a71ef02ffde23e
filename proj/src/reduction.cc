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

#include "recsp/reduction.h"

#include <string>
#include <utility>

#include "recsp/error.h"

namespace recsp {
namespace {

void RequirePositiveBudget(const Instance& instance) {
  if (instance.k < 1) {
    throw Error(ErrorCode::kValidation,
                "reduction solvers require k >= 1; use the k=0 shortcut");
  }
}

// Level-0 arcs leaving `from`: per head, the parallel arc minimizing C + c_upper.
void AppendSharedArcs(const Instance& instance, const std::vector<bool>& keep,
                      NodeId from, std::vector<ReductionArc>& out) {
  const MultiDigraph& g = instance.graph;
  std::vector<ArcId> best(g.node_count(), kNoArc);
  std::vector<NodeId> heads;
  for (ArcId a : g.out_arcs(from)) {
    const NodeId head = g.arc(a).head;
    if (!keep[head]) continue;
    if (best[head] == kNoArc) {
      heads.push_back(head);
      best[head] = a;
    } else if (g.arc(a).combined_cost() < g.arc(best[head]).combined_cost()) {
      best[head] = a;
    }
  }
  std::sort(heads.begin(), heads.end());
  for (NodeId head : heads) {
    const ArcId a = best[head];
    out.push_back(ReductionArc{.level = 0,
                               .from = from,
                               .to = head,
                               .cost = g.arc(a).combined_cost().value(),
                               .time = 0,
                               .x_segment = Path{{a}},
                               .y_segment = Path{{a}}});
  }
}

template <typename PerSource>
Reduction Assemble(const Instance& instance, const std::vector<bool>& keep,
                   ExecutionPolicy policy, PerSource per_source) {
  const int32_t n = instance.graph.node_count();
  std::vector<std::vector<ReductionArc>> chunks(n);
  if (policy == ExecutionPolicy::kParallel) {
    // Exceptions must not escape the parallel region; rethrow afterwards.
    std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic)
    for (NodeId i = 0; i < n; ++i) {
      if (!keep[i]) continue;
      try {
        per_source(i, chunks[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  } else {
    for (NodeId i = 0; i < n; ++i) {
      if (keep[i]) per_source(i, chunks[i]);
    }
  }

  Reduction reduction{CspInstance(n, instance.source, instance.sink, instance.k),
                      {}};
  for (auto& chunk : chunks) {
    for (ReductionArc& arc : chunk) {
      if (reduction.csp.AddArc(arc.from, arc.to, arc.cost, arc.time)) {
        reduction.arcs.push_back(std::move(arc));
      }
    }
  }
  return reduction;
}

}  // namespace

Reduction BuildLayeredReduction(const Instance& instance,
                                const Layering& layering,
                                ExecutionPolicy policy) {
  RequirePositiveBudget(instance);
  const MultiDigraph& g = instance.graph;
  const std::vector<bool> keep = OnSourceSinkPath(instance);
  const std::vector<NodeId> order = TopologicalOrder(g);

  return Assemble(instance, keep, policy, [&](NodeId i, auto& out) {
    AppendSharedArcs(instance, keep, i, out);
    const ShortestPathTree first =
        DagShortestPaths(g, order, CostSelector::kFirst, i);
    const ShortestPathTree upper =
        DagShortestPaths(g, order, CostSelector::kUpper, i);
    for (NodeId j = 0; j < g.node_count(); ++j) {
      if (!keep[j] || first.distance[j].is_infinite()) continue;
      const int32_t gap = layering.layer[j] - layering.layer[i];
      if (gap < 1 || gap > instance.k) continue;
      Path x = first.PathTo(g, j);
      Path y = upper.PathTo(g, j);
      const int32_t time = DivergenceCount(y, x);
      out.push_back(ReductionArc{
          .level = 1,
          .from = i,
          .to = j,
          .cost = (first.distance[j] + upper.distance[j]).value(),
          .time = time,
          .x_segment = std::move(x),
          .y_segment = std::move(y)});
    }
  });
}

Reduction BuildDagReduction(const Instance& instance, ExecutionPolicy policy) {
  RequirePositiveBudget(instance);
  const MultiDigraph& g = instance.graph;
  const std::vector<bool> keep = OnSourceSinkPath(instance);
  const std::vector<NodeId> order = TopologicalOrder(g);
  const int32_t k = instance.k;

  return Assemble(instance, keep, policy, [&](NodeId i, auto& out) {
    AppendSharedArcs(instance, keep, i, out);
    const ShortestPathTree first =
        DagShortestPaths(g, order, CostSelector::kFirst, i);
    const HopBoundedTable upper(g, CostSelector::kUpper, i, k);
    for (NodeId j = 0; j < g.node_count(); ++j) {
      if (j == i || !keep[j] || first.distance[j].is_infinite()) continue;
      const std::optional<int32_t> min_hops = upper.MinHops(j);
      if (!min_hops) continue;  // Fewest-arc i->j path is longer than k.
      const Path x = first.PathTo(g, j);
      for (int32_t l = *min_hops; l <= k; ++l) {
        out.push_back(ReductionArc{
            .level = l,
            .from = i,
            .to = j,
            .cost = (first.distance[j] + upper.at(j, l)).value(),
            .time = l,
            .x_segment = x,
            .y_segment = upper.PathTo(g, j, l)});
      }
    }
  });
}

SolutionPair ExpandSolution(const Instance& instance, const Reduction& reduction,
                            const std::vector<int32_t>& csp_path) {
  const MultiDigraph& g = instance.graph;
  Path x;
  Path y;
  CostValue claimed = 0;
  for (int32_t index : csp_path) {
    const ReductionArc& arc = reduction.arcs.at(index);
    const CostValue recomputed = PathCost(g, arc.x_segment, CostSelector::kFirst) +
                                 PathCost(g, arc.y_segment, CostSelector::kUpper);
    if (recomputed != CostValue(arc.cost)) {
      throw Error(ErrorCode::kInternal,
                  "reduction arc cost does not match its segments");
    }
    claimed += arc.cost;
    x.arcs.insert(x.arcs.end(), arc.x_segment.arcs.begin(),
                  arc.x_segment.arcs.end());
    y.arcs.insert(y.arcs.end(), arc.y_segment.arcs.begin(),
                  arc.y_segment.arcs.end());
  }
  if (!IsSimplePath(g, x, instance.source, instance.sink) ||
      !IsSimplePath(g, y, instance.source, instance.sink)) {
    throw Error(ErrorCode::kInternal, "expanded segments are not s-t paths");
  }
  SolutionPair solution = MakeSolutionPair(g, std::move(x), std::move(y));
  if (CostValue(solution.total) != claimed) {
    throw Error(ErrorCode::kInternal, "expanded total differs from CSP cost");
  }
  if (solution.divergence > instance.k) {
    throw Error(ErrorCode::kInternal,
                "expanded divergence " + std::to_string(solution.divergence) +
                    " exceeds k");
  }
  return solution;
}

namespace {

SolutionPair SolveReduction(const Instance& instance, const Reduction& reduction) {
  const std::optional<CspSolution> csp = SolveCsp(reduction.csp);
  if (!csp) {
    throw Error(ErrorCode::kInfeasible, "no source-sink path in the reduction");
  }
  SolutionPair solution = ExpandSolution(instance, reduction, csp->arcs);
  if (CostValue(solution.total) != csp->cost) {
    throw Error(ErrorCode::kInternal, "CSP optimum differs from expansion");
  }
  return solution;
}

}  // namespace

SolutionPair SolveLayered(const Instance& instance, ExecutionPolicy policy) {
  RequirePositiveBudget(instance);
  const std::optional<Layering> layering = ComputeLayering(instance);
  if (!layering) {
    throw Error(ErrorCode::kNotLayered, "graph is acyclic but not layered");
  }
  return SolveReduction(instance,
                        BuildLayeredReduction(instance, *layering, policy));
}

SolutionPair SolveDag(const Instance& instance, ExecutionPolicy policy) {
  RequirePositiveBudget(instance);
  return SolveReduction(instance, BuildDagReduction(instance, policy));
}

}  // namespace recsp
