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

#ifndef RECSP_CSP_H_
#define RECSP_CSP_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "recsp/cost_value.h"
#include "recsp/graph.h"

namespace recsp {

struct CspArc {
  NodeId tail = 0;
  NodeId head = 0;
  int64_t cost = 0;
  int32_t time = 0;
};

// Constrained shortest path input: an acyclic multigraph whose arcs carry a
// cost and a nonnegative integer transition time, plus a time budget.
class CspInstance {
 public:
  CspInstance(int32_t node_count, NodeId source, NodeId sink, int32_t budget);

  // Arcs with time > budget can never be used and are dropped; returns the
  // new arc index or nullopt when dropped. Negative times are rejected.
  std::optional<int32_t> AddArc(NodeId tail, NodeId head, int64_t cost,
                                int32_t time);

  int32_t node_count() const { return node_count_; }
  NodeId source() const { return source_; }
  NodeId sink() const { return sink_; }
  int32_t budget() const { return budget_; }
  const std::vector<CspArc>& arcs() const { return arcs_; }

 private:
  int32_t node_count_;
  NodeId source_;
  NodeId sink_;
  int32_t budget_;
  std::vector<CspArc> arcs_;
};

struct CspSolution {
  CostValue cost;
  int32_t time = 0;
  std::vector<int32_t> arcs;  // Indices into CspInstance::arcs().
};

// Minimum-cost source-sink path with total time <= budget, by a DP over
// (node, consumed time) in topological order. O(|A| T) after ordering.
// Returns nullopt when no path fits the budget. Throws Error(kCyclicGraph).
std::optional<CspSolution> SolveCsp(const CspInstance& csp);

}  // namespace recsp

#endif  // RECSP_CSP_H_
