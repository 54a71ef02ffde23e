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

// Serial reference vs OpenMP kernels. Each pair of benchmarks runs the same
// kernel on the same generated instance under both execution policies.

#include <cstdint>

#include "benchmark/benchmark.h"
#include "recsp/asp.h"
#include "recsp/io.h"
#include "recsp/oracle.h"
#include "recsp/reduction.h"

namespace recsp {
namespace {

Instance DagInstance(int32_t nodes) {
  GeneratorConfig config;
  config.family = Family::kDag;
  config.node_count = nodes;
  config.arc_count = 3 * nodes;
  config.k = 8;
  config.seed = 11;
  return Generate(config);
}

Instance AspInstance(int32_t arcs) {
  GeneratorConfig config;
  config.family = Family::kAsp;
  config.node_count = arcs / 2;
  config.arc_count = arcs;
  config.k = 16;
  config.seed = 12;
  return Generate(config);
}

Instance OracleInstance() {
  GeneratorConfig config;
  config.family = Family::kLayered;
  config.node_count = 24;
  config.arc_count = 60;
  config.layer_count = 6;
  config.k = 2;
  config.seed = 13;
  return Generate(config);
}

void BM_DagReduction(benchmark::State& state, ExecutionPolicy policy) {
  const Instance instance = DagInstance(static_cast<int32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildDagReduction(instance, policy));
  }
  state.SetItemsProcessed(state.iterations() * instance.graph.arc_count());
}

void BM_AspEvaluateRoot(benchmark::State& state, ExecutionPolicy policy) {
  const Instance instance = AspInstance(static_cast<int32_t>(state.range(0)));
  const DecompositionTree tree = *BuildDecompositionTree(instance);
  for (auto _ : state) {
    benchmark::DoNotOptimize(EvaluateRoot(instance, tree, policy, nullptr));
  }
  state.SetItemsProcessed(state.iterations() * instance.graph.arc_count());
}

void BM_Oracle(benchmark::State& state, ExecutionPolicy policy) {
  const Instance instance = OracleInstance();
  for (auto _ : state) {
    benchmark::DoNotOptimize(OracleSolve(instance, kDefaultPairLimit, policy));
  }
}

BENCHMARK_CAPTURE(BM_DagReduction, serial, ExecutionPolicy::kSerial)
    ->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DagReduction, parallel, ExecutionPolicy::kParallel)
    ->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AspEvaluateRoot, serial, ExecutionPolicy::kSerial)
    ->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AspEvaluateRoot, parallel, ExecutionPolicy::kParallel)
    ->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Oracle, serial, ExecutionPolicy::kSerial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Oracle, parallel, ExecutionPolicy::kParallel)
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace recsp

BENCHMARK_MAIN();
