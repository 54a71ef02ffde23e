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

#include "recsp/csp.h"

#include <algorithm>
#include <utility>

#include "recsp/error.h"

namespace recsp {

CspInstance::CspInstance(int32_t node_count, NodeId source, NodeId sink,
                         int32_t budget)
    : node_count_(node_count), source_(source), sink_(sink), budget_(budget) {
  if (budget < 0) throw Error(ErrorCode::kInternal, "negative CSP budget");
  if (source < 0 || source >= node_count || sink < 0 || sink >= node_count) {
    throw Error(ErrorCode::kInternal, "CSP terminal out of range");
  }
}

std::optional<int32_t> CspInstance::AddArc(NodeId tail, NodeId head,
                                           int64_t cost, int32_t time) {
  if (time < 0) throw Error(ErrorCode::kInternal, "negative CSP arc time");
  if (time > budget_) return std::nullopt;
  arcs_.push_back(CspArc{tail, head, cost, time});
  return static_cast<int32_t>(arcs_.size()) - 1;
}

std::optional<CspSolution> SolveCsp(const CspInstance& csp) {
  const int32_t n = csp.node_count();
  const int32_t width = csp.budget() + 1;
  const std::vector<CspArc>& arcs = csp.arcs();

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(arcs.size());
  std::vector<std::vector<int32_t>> out(n);
  for (int32_t i = 0; i < static_cast<int32_t>(arcs.size()); ++i) {
    edges.emplace_back(arcs[i].tail, arcs[i].head);
    out[arcs[i].tail].push_back(i);
  }
  const std::vector<NodeId> order = TopologicalOrder(n, edges);

  // cost[v * width + tau]: cheapest source->v path consuming exactly tau.
  std::vector<CostValue> cost(static_cast<size_t>(n) * width,
                              CostValue::Infinity());
  std::vector<int32_t> parent(cost.size(), -1);
  cost[static_cast<size_t>(csp.source()) * width] = 0;
  for (NodeId u : order) {
    for (int32_t a : out[u]) {
      const CspArc& arc = arcs[a];
      for (int32_t tau = 0; tau + arc.time < width; ++tau) {
        const CostValue d = cost[static_cast<size_t>(u) * width + tau];
        if (d.is_infinite()) continue;
        const CostValue candidate = d + arc.cost;
        const size_t cell = static_cast<size_t>(arc.head) * width + tau + arc.time;
        // Arcs leave u in index order; strict improvement keeps the first.
        if (candidate < cost[cell] ||
            (candidate == cost[cell] && a < parent[cell])) {
          cost[cell] = candidate;
          parent[cell] = a;
        }
      }
    }
  }

  const size_t sink_row = static_cast<size_t>(csp.sink()) * width;
  int32_t best_tau = -1;
  for (int32_t tau = 0; tau < width; ++tau) {
    if (cost[sink_row + tau].is_finite() &&
        (best_tau < 0 || cost[sink_row + tau] < cost[sink_row + best_tau])) {
      best_tau = tau;
    }
  }
  if (best_tau < 0) return std::nullopt;

  CspSolution solution;
  solution.cost = cost[sink_row + best_tau];
  solution.time = best_tau;
  NodeId v = csp.sink();
  int32_t tau = best_tau;
  while (v != csp.source() || tau != 0) {
    const int32_t a = parent[static_cast<size_t>(v) * width + tau];
    if (a < 0) throw Error(ErrorCode::kInternal, "CSP backpointers broken");
    solution.arcs.push_back(a);
    tau -= arcs[a].time;
    v = arcs[a].tail;
  }
  std::reverse(solution.arcs.begin(), solution.arcs.end());
  return solution;
}

}  // namespace recsp
