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

// Command-line front end: solve, verify, generate, bench.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "recsp/bench.h"
#include "recsp/error.h"
#include "recsp/io.h"
#include "recsp/solve.h"

namespace {

void WriteOut(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw recsp::Error(recsp::ErrorCode::kConfig, "cannot write '" + path + "'");
  }
  out << text;
}

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  return recsp::ReadFile(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recoverable robust shortest paths on DAGs under interval costs"};
  app.require_subcommand(1);

  std::string input;
  std::string method_name = "auto";
  std::string output_format = "text";
  std::string out_path;
  int64_t limit = recsp::kDefaultPairLimit;
  int32_t k_override = -1;

  CLI::App* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("--input", input, "Instance file ('-' for stdin)")->required();
  solve->add_option("--method", method_name, "auto|layered|dag|asp|oracle");
  solve->add_option("--output", output_format, "text|json");
  solve->add_option("--k", k_override, "Override the recovery budget");
  solve->add_option("--limit", limit, "Path-pair limit for the oracle");
  solve->add_option("--out", out_path, "Write the solution here (default stdout)");

  std::string solution_path;
  CLI::App* verify = app.add_subcommand("verify", "Check a claimed solution");
  verify->add_option("--input", input, "Instance file")->required();
  verify->add_option("--solution", solution_path, "Solution file")->required();
  verify->add_option("--k", k_override, "Override the recovery budget");

  std::string family_name = "dag";
  uint64_t seed = 1;
  recsp::GeneratorConfig config;
  CLI::App* generate = app.add_subcommand("generate", "Write a random instance");
  generate->add_option("--family", family_name, "layered|dag|asp");
  generate->add_option("--seed", seed, "Generator seed");
  generate->add_option("--nodes", config.node_count, "Node count (asp: cap)");
  generate->add_option("--arcs", config.arc_count, "Target arc count");
  generate->add_option("--layers", config.layer_count, "Layer count (layered)");
  generate->add_option("--k", config.k, "Recovery budget");
  generate->add_option("--c-min", config.first.lo, "Min first-stage cost");
  generate->add_option("--c-max", config.first.hi, "Max first-stage cost");
  generate->add_option("--chat-min", config.nominal.lo, "Min nominal cost");
  generate->add_option("--chat-max", config.nominal.hi, "Max nominal cost");
  generate->add_option("--delta-min", config.deviation.lo, "Min deviation");
  generate->add_option("--delta-max", config.deviation.hi, "Max deviation");
  generate->add_option("--out", out_path, "Write the instance here");

  std::vector<int32_t> sizes{1000, 10000, 100000};
  std::vector<std::string> methods;
  int32_t bench_k = 16;
  int32_t repeats = 1;
  CLI::App* bench = app.add_subcommand("bench", "Time solvers on generated families");
  bench->add_option("--family", family_name, "layered|dag|asp");
  bench->add_option("--sizes", sizes, "Target arc counts")->delimiter(',');
  bench->add_option("--k", bench_k, "Recovery budget");
  bench->add_option("--seed", seed, "Base seed");
  bench->add_option("--methods", methods, "Solvers to run")->delimiter(',');
  bench->add_option("--repeats", repeats, "Timing repeats per row");
  bench->add_option("--limit", limit, "Path-pair limit for the oracle reference");
  bench->add_option("--out", out_path, "Write the CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version are reported as successful exits.
    const int status = app.exit(e);
    return status == 0 ? recsp::kExitOk : recsp::kExitUsage;
  }

  try {
    if (*solve) {
      recsp::Instance instance = recsp::ParseInstance(ReadInput(input));
      if (k_override >= 0) {
        instance.k = k_override;
        recsp::ValidateInstance(instance);
      }
      const recsp::SolutionPair solution = recsp::DispatchSolve(
          instance, recsp::ParseMethod(method_name), limit);
      if (output_format == "json") {
        WriteOut(out_path, recsp::SolutionToJson(solution));
      } else if (output_format == "text") {
        WriteOut(out_path, recsp::SerializeSolution(solution));
      } else {
        throw recsp::Error(recsp::ErrorCode::kConfig,
                           "unknown output format '" + output_format + "'");
      }
      return recsp::kExitOk;
    }
    if (*verify) {
      recsp::Instance instance = recsp::ParseInstance(ReadInput(input));
      if (k_override >= 0) {
        instance.k = k_override;
        recsp::ValidateInstance(instance);
      }
      const recsp::SolutionPair claimed =
          recsp::ParseSolution(recsp::ReadFile(solution_path));
      const recsp::Verdict verdict = recsp::VerifySolution(instance, claimed);
      if (verdict.accepted) {
        std::cout << "accept\n";
        return recsp::kExitOk;
      }
      std::cout << "reject: " << verdict.reason << "\n";
      return recsp::kExitRejected;
    }
    if (*generate) {
      config.family = recsp::ParseFamily(family_name);
      config.seed = seed;
      WriteOut(out_path, recsp::SerializeInstance(recsp::Generate(config)));
      return recsp::kExitOk;
    }
    if (*bench) {
      recsp::BenchCase bench_case;
      bench_case.family = recsp::ParseFamily(family_name);
      bench_case.sizes = sizes;
      bench_case.k = bench_k;
      bench_case.seed = seed;
      bench_case.repeats = repeats;
      bench_case.oracle_limit = limit;
      for (const std::string& m : methods) {
        bench_case.methods.push_back(recsp::ParseMethod(m));
      }
      WriteOut(out_path, recsp::BenchCsv(recsp::BenchRun({bench_case})));
      return recsp::kExitOk;
    }
  } catch (const recsp::Error& e) {
    std::cerr << e.what() << "\n";
    return recsp::ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "InternalError: " << e.what() << "\n";
    return recsp::ExitCodeFor(recsp::ErrorCode::kInternal);
  }
  return recsp::kExitUsage;
}
