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

#ifndef RECSP_REDUCTION_H_
#define RECSP_REDUCTION_H_

#include <cstdint>
#include <vector>

#include "recsp/csp.h"
#include "recsp/graph.h"
#include "recsp/solution.h"

namespace recsp {

// Arc of the derived CSP graph. Level 0 stands for one original arc shared by
// X and Y; level l >= 1 stands for a pair of i->j segments that may diverge.
struct ReductionArc {
  int32_t level = 0;
  NodeId from = 0;
  NodeId to = 0;
  int64_t cost = 0;  // C(x_segment) + c_upper(y_segment)
  int32_t time = 0;
  Path x_segment;
  Path y_segment;
};

struct Reduction {
  CspInstance csp;
  std::vector<ReductionArc> arcs;  // arcs[i] describes csp.arcs()[i].
};

// Reduction for layered graphs: one level-0 arc per connected pair of
// consecutive-layer nodes and one level-1 arc per reachable pair at layer
// gap 1..k whose time is the divergence of the chosen segment pair.
// Budget is k. Nodes off every s-t path get no arcs.
Reduction BuildLayeredReduction(const Instance& instance,
                                const Layering& layering,
                                ExecutionPolicy policy = ExecutionPolicy::kParallel);

// Reduction for general DAGs: level-0 arcs as above, plus for each reachable
// pair (i, j) with fewest-arc count L <= k, one arc per l = L..k pairing the
// C-shortest i->j path with the c_upper-shortest path of at most l arcs, at
// time l. Per-source work is independent and merged in source-id order.
Reduction BuildDagReduction(const Instance& instance,
                            ExecutionPolicy policy = ExecutionPolicy::kParallel);

// Concatenates segments along a CSP path into (X, Y). Throws
// Error(kInternal) if the recomputed costs disagree with the reduction.
SolutionPair ExpandSolution(const Instance& instance, const Reduction& reduction,
                            const std::vector<int32_t>& csp_path);

// Both require k >= 1. Throw Error(kNotLayered), Error(kCyclicGraph) or
// Error(kInfeasible) as applicable.
SolutionPair SolveLayered(const Instance& instance,
                          ExecutionPolicy policy = ExecutionPolicy::kParallel);
SolutionPair SolveDag(const Instance& instance,
                      ExecutionPolicy policy = ExecutionPolicy::kParallel);

}  // namespace recsp

#endif  // RECSP_REDUCTION_H_
