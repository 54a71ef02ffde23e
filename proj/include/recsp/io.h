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

#ifndef RECSP_IO_H_
#define RECSP_IO_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "recsp/graph.h"
#include "recsp/solution.h"

namespace recsp {

// Instance text format. Whitespace separated, '#' starts a comment:
//
//   p recsp <n> <m> <s> <t> <k>
//   a <tail> <head> <C> <chat> <delta>     (m lines; arc ids are 0-based
//                                           in line order)
//
// Throws Error(kParse) with "line L, column C" context on malformed text and
// Error(kValidation) when the instance breaks a model invariant.
Instance ParseInstance(std::string_view text);
std::string SerializeInstance(const Instance& instance);

// Solution text format:
//
//   s <total> <first_stage_cost> <second_stage_cost> <divergence>
//   x <len> <arc ids...>
//   y <len> <arc ids...>
//
// ParseSolution only checks syntax; use VerifySolution for semantics.
std::string SerializeSolution(const SolutionPair& solution);
SolutionPair ParseSolution(std::string_view text);

// Same fields as a JSON object.
std::string SolutionToJson(const SolutionPair& solution);

std::string ReadFile(const std::string& path);

enum class Family { kLayered, kDag, kAsp };

std::string_view FamilyName(Family family);
// Throws Error(kConfig) on an unknown name.
Family ParseFamily(std::string_view name);

struct CostRange {
  int64_t lo = 0;
  int64_t hi = 0;
};

struct GeneratorConfig {
  Family family = Family::kDag;
  // Upper bound on nodes for asp; exact for layered and dag.
  int32_t node_count = 8;
  // Target arc count. Layered and dag add the arcs needed for connectivity
  // first, so they may exceed it; asp hits it exactly.
  int32_t arc_count = 12;
  int32_t layer_count = 3;  // layered only; >= 2
  int32_t k = 1;
  CostRange first{0, 20};
  CostRange nominal{0, 20};
  CostRange deviation{0, 10};
  uint64_t seed = 1;
};

// Deterministic in `config`. Throws Error(kConfig) on inconsistent settings.
//  - layered: source alone in layer 1, sink alone in the last layer, every
//    node on some s-t path.
//  - dag: a random s-t spine plus random forward arcs over a shuffled order.
//  - asp: grows from one s->t arc by random series splits and parallel
//    duplications.
Instance Generate(const GeneratorConfig& config);

}  // namespace recsp

#endif  // RECSP_IO_H_
