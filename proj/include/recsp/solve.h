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

#ifndef RECSP_SOLVE_H_
#define RECSP_SOLVE_H_

#include <string>
#include <string_view>

#include "recsp/error.h"
#include "recsp/graph.h"
#include "recsp/oracle.h"
#include "recsp/solution.h"

namespace recsp {

enum class Method { kAuto, kLayered, kDag, kAsp, kOracle };

std::string_view MethodName(Method method);
// Throws Error(kConfig) on an unknown name.
Method ParseMethod(std::string_view name);

// The concrete solver kAuto picks: asp if the graph decomposes, else layered
// if it layers, else dag.
Method ResolveAuto(const Instance& instance);

// With k = 0 every method returns X = Y = a shortest path under C + c_upper.
// Otherwise routes to the requested solver; an inapplicable explicit method
// raises its typed error instead of falling back.
SolutionPair DispatchSolve(const Instance& instance, Method method,
                           int64_t oracle_limit = kDefaultPairLimit);

struct Verdict {
  bool accepted = false;
  std::string reason;  // First failed check; empty when accepted.
};

// Checks that X and Y are simple s-t paths, |Y \ X| <= k, and that every cost
// field re-adds from the raw arc data.
Verdict VerifySolution(const Instance& instance, const SolutionPair& claimed);

// Process exit code per error class, as documented in the README.
int ExitCodeFor(ErrorCode code);
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRejected = 12;

}  // namespace recsp

#endif  // RECSP_SOLVE_H_
