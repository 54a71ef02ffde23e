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

#ifndef RECSP_ASP_H_
#define RECSP_ASP_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "recsp/cost_value.h"
#include "recsp/graph.h"
#include "recsp/solution.h"

namespace recsp {

enum class CompositionKind { kLeaf, kSeries, kParallel };

// Node of a binary decomposition tree. For kSeries, `left` is the part next
// to the source terminal.
struct DecompTreeNode {
  CompositionKind kind = CompositionKind::kLeaf;
  ArcId arc = kNoArc;  // kLeaf only.
  int32_t left = -1;
  int32_t right = -1;
  NodeId source = 0;
  NodeId sink = 0;
};

// Children always precede their parent in `nodes`, so an index-order sweep
// is a valid bottom-up traversal.
struct DecompositionTree {
  std::vector<DecompTreeNode> nodes;
  int32_t root = -1;
};

// Recognizes an arc series-parallel graph between the instance terminals by
// exhaustive reduction: merge parallel arc pairs and contract internal nodes
// of in/out-degree one until a single source->sink arc is left. Nodes and
// arcs off every s-t path are pruned first and do not appear as leaves.
// Returns nullopt when the reduction stalls.
std::optional<DecompositionTree> BuildDecompositionTree(const Instance& instance);

// Per tree node G: best first-stage cost, best upper cost with exactly l arcs
// (c_upper[0] is unused and infinite) and best pair cost with |Y \ X| = l.
struct AspNodeData {
  CostValue c_first;
  std::vector<CostValue> c_upper;  // size k + 1
  std::vector<CostValue> c_opt;    // size k + 1
};

// Which term won an array entry: for parallel nodes, one of the
// ParallelChoice values; for series nodes, the size of the left part.
struct AspBackpointers {
  int8_t first = 0;
  std::vector<int16_t> upper;
  std::vector<int16_t> opt;
};

enum ParallelChoice : int16_t {
  kTakeLeft = 0,
  kTakeRight = 1,
  kLeftFirstRightUpper = 2,  // X in left, Y in right.
  kRightFirstLeftUpper = 3,  // X in right, Y in left.
};

AspNodeData LeafInit(const Arc& arc, int32_t k);
AspNodeData ComposeParallel(const AspNodeData& left, const AspNodeData& right,
                            int32_t k, AspBackpointers* back = nullptr);
AspNodeData ComposeSeries(const AspNodeData& left, const AspNodeData& right,
                          int32_t k, AspBackpointers* back = nullptr);

// Bottom-up fold over the tree returning the root's arrays. Child arrays are
// released once their parent is built. The parallel policy processes nodes
// of equal height concurrently. `back`, when given, receives one entry per
// tree node.
AspNodeData EvaluateRoot(const Instance& instance, const DecompositionTree& tree,
                         ExecutionPolicy policy = ExecutionPolicy::kSerial,
                         std::vector<AspBackpointers>* back = nullptr);

// Serial fold that keeps the arrays of every tree node.
std::vector<AspNodeData> EvaluateAllNodes(const Instance& instance,
                                          const DecompositionTree& tree);

// Value-only root evaluation: min over l of the root's c_opt[l].
CostValue AspOptimalValue(const Instance& instance, const DecompositionTree& tree,
                          ExecutionPolicy policy = ExecutionPolicy::kSerial);

// Requires k >= 1. Throws Error(kNotSeriesParallel) for non-ASP input.
SolutionPair SolveAsp(const Instance& instance,
                      ExecutionPolicy policy = ExecutionPolicy::kSerial);

}  // namespace recsp

#endif  // RECSP_ASP_H_
