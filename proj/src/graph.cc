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

#include "recsp/graph.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <unordered_set>

#include "recsp/error.h"

namespace recsp {

CostValue SelectCost(const Arc& arc, CostSelector selector) {
  switch (selector) {
    case CostSelector::kFirst:
      return arc.first_cost;
    case CostSelector::kUpper:
      return arc.upper_cost();
    case CostSelector::kCombined:
      return arc.combined_cost();
  }
  return CostValue::Infinity();
}

MultiDigraph::MultiDigraph(int32_t node_count)
    : node_count_(node_count), out_(node_count), in_(node_count) {
  if (node_count < 0) {
    throw Error(ErrorCode::kValidation, "negative node count");
  }
}

ArcId MultiDigraph::AddArc(NodeId tail, NodeId head, int64_t first_cost,
                           int64_t nominal, int64_t deviation) {
  if (tail < 0 || tail >= node_count_ || head < 0 || head >= node_count_) {
    throw Error(ErrorCode::kValidation,
                "arc endpoint out of range: " + std::to_string(tail) + "->" +
                    std::to_string(head));
  }
  if (tail == head) {
    throw Error(ErrorCode::kValidation,
                "self-loop at node " + std::to_string(tail));
  }
  if (deviation < 0) {
    throw Error(ErrorCode::kValidation,
                "negative deviation " + std::to_string(deviation));
  }
  const ArcId id = arc_count();
  arcs_.push_back(Arc{id, tail, head, first_cost, nominal, deviation});
  // Surfaces an overflowing nominal + deviation at load time.
  arcs_.back().combined_cost();
  out_[tail].push_back(id);
  in_[head].push_back(id);
  return id;
}

void ValidateInstance(const Instance& instance) {
  const int32_t n = instance.graph.node_count();
  if (instance.source < 0 || instance.source >= n || instance.sink < 0 ||
      instance.sink >= n) {
    throw Error(ErrorCode::kValidation, "terminal out of range");
  }
  if (instance.source == instance.sink) {
    throw Error(ErrorCode::kValidation, "source equals sink");
  }
  if (instance.k < 0 || instance.k >= n) {
    throw Error(ErrorCode::kValidation,
                "recovery budget k=" + std::to_string(instance.k) +
                    " outside [0, " + std::to_string(n) + ")");
  }
  try {
    TopologicalOrder(instance.graph);
  } catch (const Error& e) {
    throw Error(ErrorCode::kValidation, std::string("cyclic graph: ") + e.what());
  }
  if (!ForwardReachable(instance.graph, instance.source)[instance.sink]) {
    throw Error(ErrorCode::kValidation, "sink not reachable from source");
  }
}

CostValue PathCost(const MultiDigraph& graph, const Path& path,
                   CostSelector selector) {
  CostValue total = 0;
  for (ArcId a : path.arcs) total += SelectCost(graph.arc(a), selector);
  return total;
}

bool IsSimplePath(const MultiDigraph& graph, const Path& path, NodeId from,
                  NodeId to) {
  if (path.empty()) return false;
  std::unordered_set<NodeId> seen{from};
  NodeId at = from;
  for (ArcId a : path.arcs) {
    if (a < 0 || a >= graph.arc_count()) return false;
    const Arc& arc = graph.arc(a);
    if (arc.tail != at) return false;
    at = arc.head;
    if (!seen.insert(at).second) return false;
  }
  return at == to;
}

std::vector<NodeId> TopologicalOrder(
    int32_t node_count, std::span<const std::pair<NodeId, NodeId>> edges) {
  std::vector<int32_t> indegree(node_count, 0);
  std::vector<std::vector<NodeId>> succ(node_count);
  for (const auto& [u, v] : edges) {
    succ[u].push_back(v);
    ++indegree[v];
  }
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  for (NodeId v = 0; v < node_count; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<NodeId> order;
  order.reserve(node_count);
  while (!ready.empty()) {
    const NodeId u = ready.top();
    ready.pop();
    order.push_back(u);
    for (NodeId v : succ[u]) {
      if (--indegree[v] == 0) ready.push(v);
    }
  }
  if (static_cast<int32_t>(order.size()) != node_count) {
    throw Error(ErrorCode::kCyclicGraph, "graph contains a directed cycle");
  }
  return order;
}

std::vector<NodeId> TopologicalOrder(const MultiDigraph& graph) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(graph.arc_count());
  for (const Arc& a : graph.arcs()) edges.emplace_back(a.tail, a.head);
  return TopologicalOrder(graph.node_count(), edges);
}

namespace {

std::vector<bool> Reach(const MultiDigraph& graph, NodeId start, bool forward) {
  std::vector<bool> seen(graph.node_count(), false);
  std::vector<NodeId> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (ArcId a : forward ? graph.out_arcs(u) : graph.in_arcs(u)) {
      const NodeId v = forward ? graph.arc(a).head : graph.arc(a).tail;
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace

std::vector<bool> ForwardReachable(const MultiDigraph& graph, NodeId from) {
  return Reach(graph, from, /*forward=*/true);
}

std::vector<bool> BackwardReachable(const MultiDigraph& graph, NodeId to) {
  return Reach(graph, to, /*forward=*/false);
}

std::vector<bool> OnSourceSinkPath(const Instance& instance) {
  std::vector<bool> fwd = ForwardReachable(instance.graph, instance.source);
  const std::vector<bool> bwd = BackwardReachable(instance.graph, instance.sink);
  for (size_t v = 0; v < fwd.size(); ++v) fwd[v] = fwd[v] && bwd[v];
  return fwd;
}

std::optional<Layering> ComputeLayering(const Instance& instance) {
  const MultiDigraph& g = instance.graph;
  const std::vector<bool> keep = OnSourceSinkPath(instance);
  Layering result;
  result.layer.assign(g.node_count(), 0);
  if (!keep[instance.source]) return result;

  // An arc lies on some s-t path iff both endpoints do. BFS from the source
  // fixes every layer; any kept arc that then spans != 1 refutes layering.
  std::queue<NodeId> queue;
  result.layer[instance.source] = 1;
  queue.push(instance.source);
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop();
    for (ArcId a : g.out_arcs(u)) {
      const NodeId v = g.arc(a).head;
      if (!keep[v]) continue;
      if (result.layer[v] == 0) {
        result.layer[v] = result.layer[u] + 1;
        queue.push(v);
      } else if (result.layer[v] != result.layer[u] + 1) {
        return std::nullopt;
      }
    }
  }
  result.layer_count = result.layer[instance.sink];
  return result;
}

Path ShortestPathTree::PathTo(const MultiDigraph& graph, NodeId to) const {
  if (distance[to].is_infinite()) {
    throw Error(ErrorCode::kInternal, "PathTo on an unreachable node");
  }
  Path path;
  for (NodeId v = to; parent_arc[v] != kNoArc; v = graph.arc(parent_arc[v]).tail) {
    path.arcs.push_back(parent_arc[v]);
  }
  std::reverse(path.arcs.begin(), path.arcs.end());
  return path;
}

ShortestPathTree DagShortestPaths(const MultiDigraph& graph,
                                  std::span<const NodeId> topo_order,
                                  CostSelector selector, NodeId source) {
  ShortestPathTree tree;
  tree.distance.assign(graph.node_count(), CostValue::Infinity());
  tree.parent_arc.assign(graph.node_count(), kNoArc);
  tree.distance[source] = 0;
  // Pull from in-arcs in id order so ties keep the smallest arc id.
  for (NodeId v : topo_order) {
    if (v == source) continue;
    CostValue best = CostValue::Infinity();
    ArcId best_arc = kNoArc;
    for (ArcId a : graph.in_arcs(v)) {
      const CostValue d = tree.distance[graph.arc(a).tail];
      if (d.is_infinite()) continue;
      const CostValue candidate = d + SelectCost(graph.arc(a), selector);
      if (candidate < best || (candidate == best && a < best_arc)) {
        best = candidate;
        best_arc = a;
      }
    }
    tree.distance[v] = best;
    tree.parent_arc[v] = best_arc;
  }
  return tree;
}

ShortestPathTree DagShortestPaths(const MultiDigraph& graph,
                                  CostSelector selector, NodeId source) {
  const std::vector<NodeId> order = TopologicalOrder(graph);
  return DagShortestPaths(graph, order, selector, source);
}

HopBoundedTable::HopBoundedTable(const MultiDigraph& graph,
                                 CostSelector selector, NodeId source,
                                 int32_t max_hops)
    : max_hops_(max_hops), source_(source) {
  if (max_hops < 0) throw Error(ErrorCode::kInternal, "negative max_hops");
  const size_t cells = static_cast<size_t>(graph.node_count()) * (max_hops + 1);
  dist_.assign(cells, CostValue::Infinity());
  parent_arc_.assign(cells, kNoArc);
  parent_hops_.assign(cells, -1);
  dist_[Index(source, 0)] = 0;

  std::vector<CostValue> arc_cost;
  arc_cost.reserve(graph.arc_count());
  for (const Arc& a : graph.arcs()) arc_cost.push_back(SelectCost(a, selector));

  for (int32_t l = 1; l <= max_hops; ++l) {
    for (NodeId v = 0; v < graph.node_count(); ++v) {
      // Inherit the (l-1)-bounded optimum first: it uses fewer arcs.
      const size_t here = Index(v, l);
      const size_t prev = Index(v, l - 1);
      dist_[here] = dist_[prev];
      parent_arc_[here] = parent_arc_[prev];
      parent_hops_[here] = parent_hops_[prev];
      for (ArcId a : graph.in_arcs(v)) {
        const CostValue d = dist_[Index(graph.arc(a).tail, l - 1)];
        if (d.is_infinite()) continue;
        const CostValue candidate = d + arc_cost[a];
        if (candidate < dist_[here]) {
          dist_[here] = candidate;
          parent_arc_[here] = a;
          parent_hops_[here] = l - 1;
        }
      }
    }
  }
}

std::optional<int32_t> HopBoundedTable::MinHops(NodeId v) const {
  for (int32_t l = 0; l <= max_hops_; ++l) {
    if (at(v, l).is_finite()) return l;
  }
  return std::nullopt;
}

Path HopBoundedTable::PathTo(const MultiDigraph& graph, NodeId v,
                             int32_t hops) const {
  if (at(v, hops).is_infinite()) {
    throw Error(ErrorCode::kInternal, "PathTo on an infinite hop-table entry");
  }
  Path path;
  NodeId node = v;
  int32_t l = hops;
  while (parent_arc_[Index(node, l)] != kNoArc) {
    const size_t cell = Index(node, l);
    const ArcId a = parent_arc_[cell];
    path.arcs.push_back(a);
    l = parent_hops_[cell];
    node = graph.arc(a).tail;
  }
  if (node != source_) {
    throw Error(ErrorCode::kInternal, "hop-table backpointers broken");
  }
  std::reverse(path.arcs.begin(), path.arcs.end());
  return path;
}

int32_t DivergenceCount(const Path& y, const Path& x) {
  const std::unordered_set<ArcId> in_x(x.arcs.begin(), x.arcs.end());
  int32_t count = 0;
  for (ArcId a : y.arcs) count += in_x.contains(a) ? 0 : 1;
  return count;
}

}  // namespace recsp
