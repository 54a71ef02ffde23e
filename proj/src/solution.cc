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

#include "recsp/solution.h"

#include <utility>

namespace recsp {

SolutionPair MakeSolutionPair(const MultiDigraph& graph, Path x, Path y) {
  SolutionPair s;
  s.first_stage_cost = PathCost(graph, x, CostSelector::kFirst).value();
  s.second_stage_cost = PathCost(graph, y, CostSelector::kUpper).value();
  s.total = (CostValue(s.first_stage_cost) + s.second_stage_cost).value();
  s.divergence = DivergenceCount(y, x);
  s.x = std::move(x);
  s.y = std::move(y);
  return s;
}

}  // namespace recsp
