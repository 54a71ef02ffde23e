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

#ifndef RECSP_BENCH_H_
#define RECSP_BENCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recsp/io.h"
#include "recsp/solve.h"

namespace recsp {

struct BenchCase {
  Family family = Family::kAsp;
  std::vector<int32_t> sizes;  // Target arc counts, one row group each.
  int32_t k = 1;               // Clamped to n - 1 per instance.
  std::vector<Method> methods;  // Empty: the family's natural solvers.
  uint64_t seed = 1;
  int32_t repeats = 1;  // Reported time is the minimum over repeats.
  int64_t oracle_limit = 100'000;
};

struct BenchRow {
  std::string family;
  int32_t n = 0;
  int32_t m = 0;
  int32_t k = 0;
  std::string method;
  std::optional<int64_t> total;  // Empty when the run failed.
  double time_ms = 0.0;
  // "ok" / "mismatch" against the oracle (or the first successful method when
  // the oracle is out of reach), "n/a" without a reference, or "error: ...".
  std::string agreement;
};

// Generator settings used for one row group of `bench_case`.
GeneratorConfig BenchConfig(const BenchCase& bench_case, int32_t size);

// Runs every case; failures are recorded in their row, never thrown.
std::vector<BenchRow> BenchRun(const std::vector<BenchCase>& suite);

// Header "family,n,m,k,method,total,time_ms,agreement" then one line per row.
std::string BenchCsv(const std::vector<BenchRow>& rows);

}  // namespace recsp

#endif  // RECSP_BENCH_H_
