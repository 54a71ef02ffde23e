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

#ifndef RECSP_SOLUTION_H_
#define RECSP_SOLUTION_H_

#include <cstdint>

#include "recsp/graph.h"

namespace recsp {

// A first-stage path X and a recovery path Y with the cost breakdown of the
// objective C(X) + c_upper(Y).
struct SolutionPair {
  Path x;
  Path y;
  int64_t first_stage_cost = 0;
  int64_t second_stage_cost = 0;
  int64_t total = 0;
  int32_t divergence = 0;  // |Y \ X|

  friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
};

// Fills in every cost field from the raw arc data.
SolutionPair MakeSolutionPair(const MultiDigraph& graph, Path x, Path y);

// Parallel kernels keep a serial twin; both produce identical results.
enum class ExecutionPolicy { kSerial, kParallel };

}  // namespace recsp

#endif  // RECSP_SOLUTION_H_
