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

#ifndef RECSP_GRAPH_H_
#define RECSP_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "recsp/cost_value.h"

namespace recsp {

using NodeId = int32_t;
using ArcId = int32_t;

inline constexpr ArcId kNoArc = -1;

struct Arc {
  ArcId id = kNoArc;
  NodeId tail = 0;
  NodeId head = 0;
  int64_t first_cost = 0;  // C_e, paid by the first-stage path.
  int64_t nominal = 0;     // Nominal second-stage cost.
  int64_t deviation = 0;   // Worst-case increase over the nominal cost, >= 0.

  // Worst-case second-stage cost, nominal + deviation.
  CostValue upper_cost() const { return CostValue(nominal) + deviation; }
  CostValue combined_cost() const { return CostValue(first_cost) + upper_cost(); }
};

enum class CostSelector { kFirst, kUpper, kCombined };

CostValue SelectCost(const Arc& arc, CostSelector selector);

// Directed multigraph with dense node ids [0, node_count) and dense arc ids
// in insertion order. Parallel arcs are kept distinct; self-loops are
// rejected.
class MultiDigraph {
 public:
  MultiDigraph() = default;
  explicit MultiDigraph(int32_t node_count);

  // Returns the id of the new arc. Throws Error(kValidation) on a self-loop,
  // an out-of-range endpoint, or a negative deviation.
  ArcId AddArc(NodeId tail, NodeId head, int64_t first_cost, int64_t nominal,
               int64_t deviation);

  int32_t node_count() const { return node_count_; }
  int32_t arc_count() const { return static_cast<int32_t>(arcs_.size()); }
  const Arc& arc(ArcId id) const { return arcs_[id]; }
  std::span<const Arc> arcs() const { return arcs_; }
  std::span<const ArcId> out_arcs(NodeId v) const { return out_[v]; }
  std::span<const ArcId> in_arcs(NodeId v) const { return in_[v]; }

 private:
  int32_t node_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<ArcId>> out_;
  std::vector<std::vector<ArcId>> in_;
};

// A full problem input: graph, terminals and recovery budget k.
struct Instance {
  MultiDigraph graph;
  NodeId source = 0;
  NodeId sink = 0;
  int32_t k = 0;
};

// Throws Error(kValidation) unless: s != t, both in range, 0 <= k < n, the
// graph is acyclic and the sink is reachable from the source.
void ValidateInstance(const Instance& instance);

struct Path {
  std::vector<ArcId> arcs;

  bool empty() const { return arcs.empty(); }
  size_t size() const { return arcs.size(); }
  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

// Sum of the selected cost over the arcs of `path`.
CostValue PathCost(const MultiDigraph& graph, const Path& path,
                   CostSelector selector);

// True iff `path` is a nonempty chain of consecutive arcs from `from` to `to`
// that repeats no node.
bool IsSimplePath(const MultiDigraph& graph, const Path& path, NodeId from,
                  NodeId to);

// Kahn's algorithm, smallest ready node id first. Throws Error(kCyclicGraph).
std::vector<NodeId> TopologicalOrder(const MultiDigraph& graph);
std::vector<NodeId> TopologicalOrder(
    int32_t node_count, std::span<const std::pair<NodeId, NodeId>> edges);

// Nodes reachable from `from` (forward) or reaching `to` (backward).
std::vector<bool> ForwardReachable(const MultiDigraph& graph, NodeId from);
std::vector<bool> BackwardReachable(const MultiDigraph& graph, NodeId to);

// Nodes that lie on at least one source-sink path.
std::vector<bool> OnSourceSinkPath(const Instance& instance);

struct Layering {
  // 1-based layer per node; 0 for nodes pruned as not lying on any s-t path.
  std::vector<int32_t> layer;
  int32_t layer_count = 0;
};

// Layers of the graph restricted to nodes on s-t paths, with the source in
// layer 1 and every remaining arc joining consecutive layers. Returns nullopt
// when no such assignment exists. Requires an acyclic graph.
std::optional<Layering> ComputeLayering(const Instance& instance);

struct ShortestPathTree {
  std::vector<CostValue> distance;  // Infinity when unreachable.
  std::vector<ArcId> parent_arc;    // kNoArc at the root and unreachable nodes.

  // Arcs of the recorded optimal path from the root to `to`; requires a
  // finite distance.
  Path PathTo(const MultiDigraph& graph, NodeId to) const;
};

// Single-source shortest paths by relaxation in topological order, so
// negative costs are fine. Among equal-cost predecessors the smallest arc id
// wins.
ShortestPathTree DagShortestPaths(const MultiDigraph& graph,
                                  std::span<const NodeId> topo_order,
                                  CostSelector selector, NodeId source);
ShortestPathTree DagShortestPaths(const MultiDigraph& graph,
                                  CostSelector selector, NodeId source);

// D[v][l]: cheapest source->v path with at most l arcs.
class HopBoundedTable {
 public:
  HopBoundedTable(const MultiDigraph& graph, CostSelector selector,
                  NodeId source, int32_t max_hops);

  int32_t max_hops() const { return max_hops_; }
  CostValue at(NodeId v, int32_t hops) const { return dist_[Index(v, hops)]; }
  // Fewest arcs on any source->v path within max_hops; nullopt otherwise.
  std::optional<int32_t> MinHops(NodeId v) const;
  // Requires a finite at(v, hops).
  Path PathTo(const MultiDigraph& graph, NodeId v, int32_t hops) const;

 private:
  size_t Index(NodeId v, int32_t hops) const {
    return static_cast<size_t>(v) * (max_hops_ + 1) + hops;
  }

  int32_t max_hops_;
  NodeId source_;
  std::vector<CostValue> dist_;
  // Last arc of the recorded path and the hop index of its prefix entry.
  std::vector<ArcId> parent_arc_;
  std::vector<int32_t> parent_hops_;
};

// |Y \ X| over arc identities.
int32_t DivergenceCount(const Path& y, const Path& x);

}  // namespace recsp

#endif  // RECSP_GRAPH_H_
