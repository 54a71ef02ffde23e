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

#include "recsp/bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <utility>

#include "recsp/asp.h"
#include "recsp/reduction.h"

namespace recsp {
namespace {

// Path enumeration is only attempted on graphs this small.
constexpr int32_t kOracleMaxArcs = 64;

std::vector<Method> DefaultMethods(Family family) {
  switch (family) {
    case Family::kAsp:
      return {Method::kAsp};
    case Family::kLayered:
      return {Method::kLayered, Method::kDag};
    case Family::kDag:
      return {Method::kDag};
  }
  return {};
}

// Asp rows time the value-only kernel; the others run the full solver.
int64_t RunMethod(const Instance& instance, Method method) {
  if (method == Method::kAsp && instance.k > 0) {
    const std::optional<DecompositionTree> tree = BuildDecompositionTree(instance);
    if (!tree) {
      throw Error(ErrorCode::kNotSeriesParallel, "graph is not series-parallel");
    }
    return AspOptimalValue(instance, *tree, ExecutionPolicy::kParallel).value();
  }
  return DispatchSolve(instance, method).total;
}

}  // namespace

GeneratorConfig BenchConfig(const BenchCase& bench_case, int32_t size) {
  GeneratorConfig config;
  config.family = bench_case.family;
  config.arc_count = std::max(size, 1);
  config.seed = bench_case.seed + static_cast<uint64_t>(size);
  switch (bench_case.family) {
    case Family::kAsp:
      config.node_count = std::max(2, size);
      break;
    case Family::kLayered:
      config.node_count = std::max(3, size / 2);
      config.layer_count = std::max(3, config.node_count / 4);
      break;
    case Family::kDag:
      config.node_count = std::max(2, size / 3);
      break;
  }
  config.k = 0;
  return config;
}

std::vector<BenchRow> BenchRun(const std::vector<BenchCase>& suite) {
  std::vector<BenchRow> rows;
  for (const BenchCase& bench_case : suite) {
    const std::vector<Method> methods = bench_case.methods.empty()
                                            ? DefaultMethods(bench_case.family)
                                            : bench_case.methods;
    for (int32_t size : bench_case.sizes) {
      BenchRow base;
      base.family = std::string(FamilyName(bench_case.family));
      Instance instance;
      try {
        instance = Generate(BenchConfig(bench_case, size));
      } catch (const Error& e) {
        base.method = "generate";
        base.agreement = std::string("error: ") + e.what();
        rows.push_back(base);
        continue;
      }
      instance.k = std::min(bench_case.k, instance.graph.node_count() - 1);
      base.n = instance.graph.node_count();
      base.m = instance.graph.arc_count();
      base.k = instance.k;

      std::optional<int64_t> reference;
      if (base.m <= kOracleMaxArcs) {
        try {
          reference = DispatchSolve(instance, Method::kOracle,
                                    bench_case.oracle_limit).total;
        } catch (const Error&) {
        }
      }

      const size_t group_start = rows.size();
      for (Method method : methods) {
        BenchRow row = base;
        row.method = std::string(MethodName(method));
        double best_ms = -1.0;
        try {
          for (int32_t r = 0; r < std::max(1, bench_case.repeats); ++r) {
            const auto start = std::chrono::steady_clock::now();
            row.total = RunMethod(instance, method);
            const std::chrono::duration<double, std::milli> elapsed =
                std::chrono::steady_clock::now() - start;
            if (best_ms < 0 || elapsed.count() < best_ms) best_ms = elapsed.count();
          }
          row.time_ms = best_ms;
        } catch (const std::exception& e) {
          row.total.reset();
          row.agreement = std::string("error: ") + e.what();
        }
        if (row.total && !reference) reference = row.total;
        rows.push_back(std::move(row));
      }
      for (size_t i = group_start; i < rows.size(); ++i) {
        if (!rows[i].total) continue;
        rows[i].agreement = !reference                  ? "n/a"
                            : *rows[i].total == *reference ? "ok"
                                                        : "mismatch";
      }
    }
  }
  return rows;
}

std::string BenchCsv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "family,n,m,k,method,total,time_ms,agreement\n";
  for (const BenchRow& row : rows) {
    char time[32];
    std::snprintf(time, sizeof(time), "%.3f", row.time_ms);
    std::string agreement = row.agreement;
    std::replace(agreement.begin(), agreement.end(), ',', ';');
    std::replace(agreement.begin(), agreement.end(), '\n', ' ');
    os << row.family << ',' << row.n << ',' << row.m << ',' << row.k << ','
       << row.method << ',' << (row.total ? std::to_string(*row.total) : "")
       << ',' << time << ',' << agreement << '\n';
  }
  return os.str();
}

}  // namespace recsp
