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

#include "recsp/asp.h"

#include <algorithm>
#include <deque>
#include <exception>
#include <string>
#include <unordered_map>
#include <utility>

#include "recsp/error.h"

namespace recsp {

std::optional<DecompositionTree> BuildDecompositionTree(const Instance& instance) {
  const MultiDigraph& g = instance.graph;
  const std::vector<bool> keep = OnSourceSinkPath(instance);

  DecompositionTree tree;
  struct LiveEdge {
    NodeId tail;
    NodeId head;
    int32_t tree_node;
    int32_t out_pos;  // index in out[tail]
    int32_t in_pos;   // index in in[head]
    int32_t bundle_next;  // next live edge with the same endpoints, or -1
  };
  std::vector<LiveEdge> edges;
  std::vector<std::vector<int32_t>> in(g.node_count());
  std::vector<std::vector<int32_t>> out(g.node_count());
  {
    std::vector<int32_t> out_degree(g.node_count(), 0);
    for (const Arc& a : g.arcs()) ++out_degree[a.tail];
    for (NodeId v = 0; v < g.node_count(); ++v) {
      out[v].reserve(out_degree[v]);
      in[v].reserve(g.in_arcs(v).size());
    }
  }
  // Live edges per endpoint pair as the head of an intrusive list plus its
  // length. A bundle loses either all of its edges (parallel merge) or its
  // only edge (series contraction).
  struct Bundle {
    int32_t head;
    int32_t size;
  };
  std::unordered_map<uint64_t, Bundle> bundles;
  bundles.reserve(g.arc_count());
  auto key_of = [](NodeId u, NodeId v) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) |
           static_cast<uint32_t>(v);
  };
  int32_t live = 0;

  auto add_edge = [&](NodeId tail, NodeId head, int32_t tree_node) {
    const int32_t e = static_cast<int32_t>(edges.size());
    edges.push_back(LiveEdge{tail, head, tree_node,
                             static_cast<int32_t>(out[tail].size()),
                             static_cast<int32_t>(in[head].size()), -1});
    out[tail].push_back(e);
    in[head].push_back(e);
    auto [it, inserted] = bundles.try_emplace(key_of(tail, head), Bundle{e, 0});
    if (!inserted) {
      edges[e].bundle_next = it->second.head;
      it->second.head = e;
    }
    ++it->second.size;
    ++live;
    return it->second.size;
  };
  // Swap-removes e from its adjacency lists; the bundle is the caller's job.
  auto unlink_edge = [&](int32_t e) {
    const LiveEdge& edge = edges[e];
    std::vector<int32_t>& o = out[edge.tail];
    edges[o.back()].out_pos = edge.out_pos;
    o[edge.out_pos] = o.back();
    o.pop_back();
    std::vector<int32_t>& i = in[edge.head];
    edges[i.back()].in_pos = edge.in_pos;
    i[edge.in_pos] = i.back();
    i.pop_back();
    --live;
  };
  auto add_tree_node = [&](DecompTreeNode node) {
    tree.nodes.push_back(node);
    return static_cast<int32_t>(tree.nodes.size()) - 1;
  };

  // Work items: a node to test for series contraction, or an endpoint pair
  // to test for parallel merges.
  struct Work {
    bool is_pair;
    NodeId u;
    NodeId v;
  };
  std::deque<Work> work;
  for (const Arc& a : g.arcs()) {
    if (!keep[a.tail] || !keep[a.head]) continue;
    const int32_t leaf = add_tree_node(DecompTreeNode{
        CompositionKind::kLeaf, a.id, -1, -1, a.tail, a.head});
    if (add_edge(a.tail, a.head, leaf) == 2) {
      work.push_back({true, a.tail, a.head});
    }
  }
  if (live == 0) return std::nullopt;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (keep[v]) work.push_back({false, v, v});
  }

  while (!work.empty()) {
    const Work item = work.front();
    work.pop_front();
    if (item.is_pair) {
      auto it = bundles.find(key_of(item.u, item.v));
      if (it == bundles.end() || it->second.size < 2) continue;
      // Merge pairwise in queue order until one edge is left.
      std::deque<int32_t> queue;  // tree node ids
      for (int32_t e = it->second.head; e != -1; e = edges[e].bundle_next) {
        unlink_edge(e);
        queue.push_front(edges[e].tree_node);
      }
      bundles.erase(it);
      while (queue.size() >= 2) {
        const int32_t a = queue.front();
        queue.pop_front();
        const int32_t b = queue.front();
        queue.pop_front();
        queue.push_back(add_tree_node(DecompTreeNode{
            CompositionKind::kParallel, kNoArc, a, b, item.u, item.v}));
      }
      add_edge(item.u, item.v, queue.front());
      work.push_back({false, item.u, item.u});
      work.push_back({false, item.v, item.v});
      continue;
    }
    const NodeId v = item.u;
    if (v == instance.source || v == instance.sink) continue;
    if (in[v].size() != 1 || out[v].size() != 1) continue;
    const int32_t a = in[v].front();
    const int32_t b = out[v].front();
    const NodeId u = edges[a].tail;
    const NodeId w = edges[b].head;
    const int32_t node = add_tree_node(DecompTreeNode{
        CompositionKind::kSeries, kNoArc, edges[a].tree_node,
        edges[b].tree_node, u, w});
    unlink_edge(a);
    unlink_edge(b);
    bundles.erase(key_of(u, v));
    bundles.erase(key_of(v, w));
    if (add_edge(u, w, node) >= 2) work.push_back({true, u, w});
  }

  if (live != 1) return std::nullopt;
  if (out[instance.source].size() != 1 || in[instance.sink].size() != 1 ||
      out[instance.source].front() != in[instance.sink].front()) {
    return std::nullopt;
  }
  tree.root = edges[out[instance.source].front()].tree_node;
  return tree;
}

AspNodeData LeafInit(const Arc& arc, int32_t k) {
  AspNodeData data;
  data.c_first = arc.first_cost;
  data.c_upper.assign(k + 1, CostValue::Infinity());
  data.c_opt.assign(k + 1, CostValue::Infinity());
  if (k >= 1) data.c_upper[1] = arc.upper_cost();
  data.c_opt[0] = arc.combined_cost();
  return data;
}

AspNodeData ComposeParallel(const AspNodeData& left, const AspNodeData& right,
                            int32_t k, AspBackpointers* back) {
  AspNodeData data;
  data.c_upper.assign(k + 1, CostValue::Infinity());
  data.c_opt.assign(k + 1, CostValue::Infinity());
  if (back) {
    back->upper.assign(k + 1, kTakeLeft);
    back->opt.assign(k + 1, kTakeLeft);
  }

  const bool first_right = right.c_first < left.c_first;
  data.c_first = first_right ? right.c_first : left.c_first;
  if (back) back->first = first_right ? kTakeRight : kTakeLeft;

  const bool opt0_right = right.c_opt[0] < left.c_opt[0];
  data.c_opt[0] = opt0_right ? right.c_opt[0] : left.c_opt[0];
  if (back) back->opt[0] = opt0_right ? kTakeRight : kTakeLeft;

  for (int32_t l = 1; l <= k; ++l) {
    const CostValue candidates[4] = {
        left.c_opt[l], right.c_opt[l], left.c_first + right.c_upper[l],
        right.c_first + left.c_upper[l]};
    int16_t winner = kTakeLeft;
    for (int16_t c = 1; c < 4; ++c) {
      if (candidates[c] < candidates[winner]) winner = c;
    }
    data.c_opt[l] = candidates[winner];

    const bool upper_right = right.c_upper[l] < left.c_upper[l];
    data.c_upper[l] = upper_right ? right.c_upper[l] : left.c_upper[l];
    if (back) {
      back->opt[l] = winner;
      back->upper[l] = upper_right ? kTakeRight : kTakeLeft;
    }
  }
  return data;
}

AspNodeData ComposeSeries(const AspNodeData& left, const AspNodeData& right,
                          int32_t k, AspBackpointers* back) {
  AspNodeData data;
  data.c_first = left.c_first + right.c_first;
  data.c_upper.assign(k + 1, CostValue::Infinity());
  data.c_opt.assign(k + 1, CostValue::Infinity());
  if (back) {
    back->upper.assign(k + 1, 0);
    back->opt.assign(k + 1, 0);
  }

  for (int32_t j = 0; j <= k; ++j) {
    if (left.c_opt[j].is_infinite()) continue;
    for (int32_t l = j; l <= k; ++l) {
      const CostValue candidate = left.c_opt[j] + right.c_opt[l - j];
      // Increasing j: strict improvement keeps the smallest split.
      if (candidate < data.c_opt[l]) {
        data.c_opt[l] = candidate;
        if (back) back->opt[l] = static_cast<int16_t>(j);
      }
    }
  }
  // c_upper[1] stays infinite: any path through the junction has >= 2 arcs.
  for (int32_t j = 1; j < k; ++j) {
    if (left.c_upper[j].is_infinite()) continue;
    for (int32_t l = j + 1; l <= k; ++l) {
      const CostValue candidate = left.c_upper[j] + right.c_upper[l - j];
      if (candidate < data.c_upper[l]) {
        data.c_upper[l] = candidate;
        if (back) back->upper[l] = static_cast<int16_t>(j);
      }
    }
  }
  return data;
}

namespace {

AspNodeData EvaluateNode(const Instance& instance, const DecompositionTree& tree,
                         int32_t index, const std::vector<AspNodeData>& values,
                         AspBackpointers* back) {
  const DecompTreeNode& node = tree.nodes[index];
  const int32_t k = instance.k;
  switch (node.kind) {
    case CompositionKind::kLeaf:
      return LeafInit(instance.graph.arc(node.arc), k);
    case CompositionKind::kParallel:
      return ComposeParallel(values[node.left], values[node.right], k, back);
    case CompositionKind::kSeries:
      return ComposeSeries(values[node.left], values[node.right], k, back);
  }
  throw Error(ErrorCode::kInternal, "unknown tree node kind");
}

void Release(AspNodeData& data) {
  std::vector<CostValue>().swap(data.c_upper);
  std::vector<CostValue>().swap(data.c_opt);
}

void RequireTreeFor(const Instance& instance, const DecompositionTree& tree) {
  if (instance.k > INT16_MAX) {
    throw Error(ErrorCode::kValidation, "k too large for the tree solver");
  }
  if (tree.root < 0 || tree.root >= static_cast<int32_t>(tree.nodes.size())) {
    throw Error(ErrorCode::kInternal, "decomposition tree has no root");
  }
}

}  // namespace

std::vector<AspNodeData> EvaluateAllNodes(const Instance& instance,
                                          const DecompositionTree& tree) {
  RequireTreeFor(instance, tree);
  std::vector<AspNodeData> values(tree.nodes.size());
  for (int32_t i = 0; i < static_cast<int32_t>(tree.nodes.size()); ++i) {
    values[i] = EvaluateNode(instance, tree, i, values, nullptr);
  }
  return values;
}

AspNodeData EvaluateRoot(const Instance& instance, const DecompositionTree& tree,
                         ExecutionPolicy policy,
                         std::vector<AspBackpointers>* back) {
  RequireTreeFor(instance, tree);
  const int32_t count = static_cast<int32_t>(tree.nodes.size());
  std::vector<AspNodeData> values(count);
  if (back) back->assign(count, AspBackpointers{});

  auto step = [&](int32_t i) {
    values[i] = EvaluateNode(instance, tree, i, values,
                             back ? &(*back)[i] : nullptr);
    const DecompTreeNode& node = tree.nodes[i];
    if (node.kind != CompositionKind::kLeaf) {
      Release(values[node.left]);
      Release(values[node.right]);
    }
  };

  if (policy == ExecutionPolicy::kSerial) {
    for (int32_t i = 0; i < count; ++i) step(i);
    return std::move(values[tree.root]);
  }

  // Nodes of equal height have disjoint children.
  std::vector<int32_t> height(count, 0);
  int32_t max_height = 0;
  for (int32_t i = 0; i < count; ++i) {
    const DecompTreeNode& node = tree.nodes[i];
    if (node.kind != CompositionKind::kLeaf) {
      height[i] = 1 + std::max(height[node.left], height[node.right]);
      max_height = std::max(max_height, height[i]);
    }
  }
  std::vector<std::vector<int32_t>> levels(max_height + 1);
  for (int32_t i = 0; i < count; ++i) levels[height[i]].push_back(i);

  std::exception_ptr error;
  for (const std::vector<int32_t>& level : levels) {
    const int32_t size = static_cast<int32_t>(level.size());
#pragma omp parallel for schedule(static) if (size > 64)
    for (int32_t p = 0; p < size; ++p) {
      try {
        step(level[p]);
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  }
  return std::move(values[tree.root]);
}

CostValue AspOptimalValue(const Instance& instance, const DecompositionTree& tree,
                          ExecutionPolicy policy) {
  const AspNodeData root = EvaluateRoot(instance, tree, policy);
  return *std::min_element(root.c_opt.begin(), root.c_opt.end());
}

namespace {

enum class Want : int8_t { kFirst, kUpper, kOpt };

struct Task {
  int32_t node;
  Want want;
  int32_t l;
};

// Walks the backpointers of the requested root entry, emitting arcs
// source-to-sink into X and/or Y.
void Reconstruct(const DecompositionTree& tree,
                 const std::vector<AspBackpointers>& back, int32_t level,
                 Path& x, Path& y) {
  std::vector<Task> stack{{tree.root, Want::kOpt, level}};
  while (!stack.empty()) {
    const Task task = stack.back();
    stack.pop_back();
    const DecompTreeNode& node = tree.nodes[task.node];
    const AspBackpointers& bp = back[task.node];
    switch (node.kind) {
      case CompositionKind::kLeaf:
        if (task.want != Want::kUpper) x.arcs.push_back(node.arc);
        if (task.want != Want::kFirst) y.arcs.push_back(node.arc);
        break;
      case CompositionKind::kSeries: {
        int32_t split = 0;
        if (task.want == Want::kUpper) split = bp.upper[task.l];
        if (task.want == Want::kOpt) split = bp.opt[task.l];
        stack.push_back({node.right, task.want, task.l - split});
        stack.push_back({node.left, task.want, split});
        break;
      }
      case CompositionKind::kParallel: {
        int16_t choice = kTakeLeft;
        if (task.want == Want::kFirst) choice = bp.first;
        if (task.want == Want::kUpper) choice = bp.upper[task.l];
        if (task.want == Want::kOpt) choice = bp.opt[task.l];
        switch (choice) {
          case kTakeLeft:
            stack.push_back({node.left, task.want, task.l});
            break;
          case kTakeRight:
            stack.push_back({node.right, task.want, task.l});
            break;
          case kLeftFirstRightUpper:
            stack.push_back({node.left, Want::kFirst, 0});
            stack.push_back({node.right, Want::kUpper, task.l});
            break;
          case kRightFirstLeftUpper:
            stack.push_back({node.right, Want::kFirst, 0});
            stack.push_back({node.left, Want::kUpper, task.l});
            break;
        }
        break;
      }
    }
  }
}

}  // namespace

SolutionPair SolveAsp(const Instance& instance, ExecutionPolicy policy) {
  if (instance.k < 1) {
    throw Error(ErrorCode::kValidation,
                "tree solver requires k >= 1; use the k=0 shortcut");
  }
  const std::optional<DecompositionTree> tree = BuildDecompositionTree(instance);
  if (!tree) {
    throw Error(ErrorCode::kNotSeriesParallel,
                "graph is not arc series-parallel between the terminals");
  }
  std::vector<AspBackpointers> back;
  const AspNodeData root = EvaluateRoot(instance, *tree, policy, &back);
  const auto best = std::min_element(root.c_opt.begin(), root.c_opt.end());
  if (best->is_infinite()) {
    throw Error(ErrorCode::kInfeasible, "no source-sink path");
  }
  const int32_t level = static_cast<int32_t>(best - root.c_opt.begin());

  Path x;
  Path y;
  Reconstruct(*tree, back, level, x, y);
  SolutionPair solution =
      MakeSolutionPair(instance.graph, std::move(x), std::move(y));
  if (CostValue(solution.total) != *best || solution.divergence != level) {
    throw Error(ErrorCode::kInternal,
                "reconstructed pair does not match the root entry at level " +
                    std::to_string(level));
  }
  return solution;
}

}  // namespace recsp
