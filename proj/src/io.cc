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

#include "recsp/io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "recsp/error.h"
#include "recsp/random.h"

namespace recsp {
namespace {

struct Token {
  std::string_view text;
  int line;
  int column;
};

// Splits one line into whitespace-separated tokens, dropping '#' comments.
std::vector<Token> Tokenize(std::string_view line, int line_number) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const size_t start = i;
    while (i < line.size() && line[i] != '#' &&
           !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    tokens.push_back(Token{line.substr(start, i - start), line_number,
                           static_cast<int>(start) + 1});
  }
  return tokens;
}

std::vector<std::vector<Token>> TokenizeLines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t end = std::min(text.find('\n', pos), text.size());
    ++line_number;
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<Token> tokens = Tokenize(line, line_number);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void Fail(int line, int column, const std::string& message) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ", column " +
                                     std::to_string(column) + ": " + message);
}

int64_t ToInt(const Token& token) {
  int64_t value = 0;
  const char* begin = token.text.data();
  const char* end = begin + token.text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    Fail(token.line, token.column,
         "expected a 64-bit integer, got '" + std::string(token.text) + "'");
  }
  return value;
}

int32_t ToInt32(const Token& token) {
  const int64_t value = ToInt(token);
  if (value < INT32_MIN || value > INT32_MAX) {
    Fail(token.line, token.column, "value out of 32-bit range");
  }
  return static_cast<int32_t>(value);
}

void ExpectArity(const std::vector<Token>& line, size_t arity,
                 std::string_view what) {
  if (line.size() != arity) {
    Fail(line.front().line, line.front().column,
         std::string(what) + " line needs " + std::to_string(arity) +
             " fields, got " + std::to_string(line.size()));
  }
}

void ExpectTag(const Token& token, std::string_view tag) {
  if (token.text != tag) {
    Fail(token.line, token.column,
         "expected '" + std::string(tag) + "', got '" +
             std::string(token.text) + "'");
  }
}

std::vector<ArcId> ParseIdList(const std::vector<Token>& line,
                               std::string_view tag) {
  ExpectTag(line[0], tag);
  if (line.size() < 2) Fail(line[0].line, line[0].column, "missing length");
  const int64_t length = ToInt(line[1]);
  if (length < 0 || static_cast<size_t>(length) != line.size() - 2) {
    Fail(line[1].line, line[1].column, "length does not match the id list");
  }
  std::vector<ArcId> ids;
  for (size_t i = 2; i < line.size(); ++i) ids.push_back(ToInt32(line[i]));
  return ids;
}

void AppendIds(std::ostringstream& os, char tag, const Path& path) {
  os << tag << ' ' << path.size();
  for (ArcId a : path.arcs) os << ' ' << a;
  os << '\n';
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  const std::vector<std::vector<Token>> lines = TokenizeLines(text);
  if (lines.empty()) Fail(1, 1, "empty instance");
  const std::vector<Token>& header = lines[0];
  ExpectTag(header[0], "p");
  ExpectArity(header, 7, "problem");
  ExpectTag(header[1], "recsp");
  const int32_t n = ToInt32(header[2]);
  const int64_t m = ToInt(header[3]);
  if (n < 0) Fail(header[2].line, header[2].column, "negative node count");
  if (m < 0) Fail(header[3].line, header[3].column, "negative arc count");
  if (static_cast<int64_t>(lines.size()) - 1 != m) {
    Fail(header[3].line, header[3].column,
         "header declares " + std::to_string(m) + " arcs, found " +
             std::to_string(lines.size() - 1) + " arc lines");
  }

  Instance instance;
  instance.graph = MultiDigraph(n);
  instance.source = ToInt32(header[4]);
  instance.sink = ToInt32(header[5]);
  instance.k = ToInt32(header[6]);
  for (size_t i = 1; i < lines.size(); ++i) {
    const std::vector<Token>& line = lines[i];
    ExpectTag(line[0], "a");
    ExpectArity(line, 6, "arc");
    const NodeId tail = ToInt32(line[1]);
    const NodeId head = ToInt32(line[2]);
    const int64_t first = ToInt(line[3]);
    const int64_t nominal = ToInt(line[4]);
    const int64_t deviation = ToInt(line[5]);
    try {
      instance.graph.AddArc(tail, head, first, nominal, deviation);
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line[0].line) + ": " +
                                e.what());
    }
  }
  ValidateInstance(instance);
  return instance;
}

std::string SerializeInstance(const Instance& instance) {
  std::ostringstream os;
  const MultiDigraph& g = instance.graph;
  os << "p recsp " << g.node_count() << ' ' << g.arc_count() << ' '
     << instance.source << ' ' << instance.sink << ' ' << instance.k << '\n';
  for (const Arc& a : g.arcs()) {
    os << "a " << a.tail << ' ' << a.head << ' ' << a.first_cost << ' '
       << a.nominal << ' ' << a.deviation << '\n';
  }
  return os.str();
}

std::string SerializeSolution(const SolutionPair& solution) {
  std::ostringstream os;
  os << "s " << solution.total << ' ' << solution.first_stage_cost << ' '
     << solution.second_stage_cost << ' ' << solution.divergence << '\n';
  AppendIds(os, 'x', solution.x);
  AppendIds(os, 'y', solution.y);
  return os.str();
}

SolutionPair ParseSolution(std::string_view text) {
  const std::vector<std::vector<Token>> lines = TokenizeLines(text);
  if (lines.size() != 3) {
    Fail(1, 1, "solution needs exactly 3 lines (s, x, y), found " +
                   std::to_string(lines.size()));
  }
  ExpectTag(lines[0][0], "s");
  ExpectArity(lines[0], 5, "summary");
  SolutionPair solution;
  solution.total = ToInt(lines[0][1]);
  solution.first_stage_cost = ToInt(lines[0][2]);
  solution.second_stage_cost = ToInt(lines[0][3]);
  solution.divergence = ToInt32(lines[0][4]);
  solution.x.arcs = ParseIdList(lines[1], "x");
  solution.y.arcs = ParseIdList(lines[2], "y");
  return solution;
}

std::string SolutionToJson(const SolutionPair& solution) {
  nlohmann::ordered_json j;
  j["total"] = solution.total;
  j["first_stage_cost"] = solution.first_stage_cost;
  j["second_stage_cost"] = solution.second_stage_cost;
  j["divergence"] = solution.divergence;
  j["x"] = solution.x.arcs;
  j["y"] = solution.y.arcs;
  return j.dump() + "\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kLayered:
      return "layered";
    case Family::kDag:
      return "dag";
    case Family::kAsp:
      return "asp";
  }
  return "unknown";
}

Family ParseFamily(std::string_view name) {
  if (name == "layered") return Family::kLayered;
  if (name == "dag") return Family::kDag;
  if (name == "asp") return Family::kAsp;
  throw Error(ErrorCode::kConfig, "unknown family '" + std::string(name) + "'");
}

namespace {

void CheckRange(const CostRange& range, std::string_view name) {
  if (range.lo > range.hi) {
    throw Error(ErrorCode::kConfig, std::string(name) + " range is empty");
  }
}

// Fisher-Yates driven by SplitMix64 so that labels are portable.
std::vector<NodeId> RandomPermutation(int32_t n, SplitMix64& rng) {
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int32_t i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.Uniform(0, i)]);
  }
  return perm;
}

Instance Finish(const GeneratorConfig& config, int32_t node_count,
                NodeId source, NodeId sink,
                const std::vector<std::pair<NodeId, NodeId>>& arcs,
                SplitMix64& rng) {
  Instance instance;
  instance.graph = MultiDigraph(node_count);
  instance.source = source;
  instance.sink = sink;
  instance.k = config.k;
  for (const auto& [tail, head] : arcs) {
    const int64_t first = rng.Uniform(config.first.lo, config.first.hi);
    const int64_t nominal = rng.Uniform(config.nominal.lo, config.nominal.hi);
    const int64_t deviation =
        rng.Uniform(config.deviation.lo, config.deviation.hi);
    instance.graph.AddArc(tail, head, first, nominal, deviation);
  }
  if (instance.k < 0 || instance.k >= node_count) {
    throw Error(ErrorCode::kConfig,
                "k=" + std::to_string(instance.k) + " outside [0, " +
                    std::to_string(node_count) + ")");
  }
  ValidateInstance(instance);
  return instance;
}

Instance GenerateLayered(const GeneratorConfig& config, SplitMix64& rng) {
  const int32_t n = config.node_count;
  const int32_t layers = config.layer_count;
  if (layers < 2) throw Error(ErrorCode::kConfig, "layer_count must be >= 2");
  if (n - 2 < layers - 2 || (layers == 2 && n != 2)) {
    throw Error(ErrorCode::kConfig,
                "node_count does not fit the layer count");
  }
  // Position p in 0..n-1 is relabelled by a random permutation at the end;
  // position 0 is the source and n-1 the sink.
  std::vector<std::vector<int32_t>> layer(layers);
  layer.front().push_back(0);
  layer.back().push_back(n - 1);
  int32_t next = 1;
  for (int32_t h = 1; h + 1 < layers; ++h) layer[h].push_back(next++);
  while (next < n - 1) {
    layer[rng.Uniform(1, layers - 2)].push_back(next++);
  }

  std::vector<std::pair<int32_t, int32_t>> arcs;
  auto pick = [&](const std::vector<int32_t>& nodes) {
    return nodes[rng.Uniform(0, static_cast<int64_t>(nodes.size()) - 1)];
  };
  for (int32_t h = 0; h + 1 < layers; ++h) {
    std::vector<bool> has_out(n, false);
    for (int32_t v : layer[h + 1]) {
      const int32_t u = pick(layer[h]);
      arcs.emplace_back(u, v);
      has_out[u] = true;
    }
    for (int32_t u : layer[h]) {
      if (!has_out[u]) arcs.emplace_back(u, pick(layer[h + 1]));
    }
  }
  while (static_cast<int32_t>(arcs.size()) < config.arc_count) {
    const int32_t h = static_cast<int32_t>(rng.Uniform(0, layers - 2));
    arcs.emplace_back(pick(layer[h]), pick(layer[h + 1]));
  }

  const std::vector<NodeId> label = RandomPermutation(n, rng);
  for (auto& [u, v] : arcs) {
    u = label[u];
    v = label[v];
  }
  return Finish(config, n, label[0], label[n - 1], arcs, rng);
}

Instance GenerateDag(const GeneratorConfig& config, SplitMix64& rng) {
  const int32_t n = config.node_count;
  if (n < 2) throw Error(ErrorCode::kConfig, "dag needs node_count >= 2");
  std::vector<std::pair<int32_t, int32_t>> arcs;
  int32_t previous = 0;
  for (int32_t p = 1; p < n - 1; ++p) {
    if (rng.Chance(1, 2)) {
      arcs.emplace_back(previous, p);
      previous = p;
    }
  }
  arcs.emplace_back(previous, n - 1);
  while (static_cast<int32_t>(arcs.size()) < config.arc_count) {
    int32_t u = static_cast<int32_t>(rng.Uniform(0, n - 1));
    int32_t v = static_cast<int32_t>(rng.Uniform(0, n - 2));
    if (v >= u) ++v;
    if (u > v) std::swap(u, v);
    arcs.emplace_back(u, v);
  }
  const std::vector<NodeId> label = RandomPermutation(n, rng);
  for (auto& [u, v] : arcs) {
    u = label[u];
    v = label[v];
  }
  return Finish(config, n, label[0], label[n - 1], arcs, rng);
}

Instance GenerateAsp(const GeneratorConfig& config, SplitMix64& rng) {
  if (config.arc_count < 1) throw Error(ErrorCode::kConfig, "asp needs >= 1 arc");
  if (config.node_count < 2) {
    throw Error(ErrorCode::kConfig, "asp needs node_count >= 2");
  }
  std::vector<std::pair<NodeId, NodeId>> arcs{{0, 1}};
  int32_t nodes = 2;
  while (static_cast<int32_t>(arcs.size()) < config.arc_count) {
    const size_t i = rng.Uniform(0, static_cast<int64_t>(arcs.size()) - 1);
    const bool series = rng.Chance(1, 2);
    if (series && nodes < config.node_count) {
      const NodeId middle = nodes++;
      const NodeId head = arcs[i].second;
      arcs[i].second = middle;
      arcs.emplace_back(middle, head);
    } else {
      arcs.push_back(arcs[i]);
    }
  }
  return Finish(config, nodes, 0, 1, arcs, rng);
}

}  // namespace

Instance Generate(const GeneratorConfig& config) {
  CheckRange(config.first, "first-stage cost");
  CheckRange(config.nominal, "nominal cost");
  CheckRange(config.deviation, "deviation");
  if (config.deviation.lo < 0) {
    throw Error(ErrorCode::kConfig, "deviation range must be nonnegative");
  }
  SplitMix64 rng(config.seed);
  switch (config.family) {
    case Family::kLayered:
      return GenerateLayered(config, rng);
    case Family::kDag:
      return GenerateDag(config, rng);
    case Family::kAsp:
      return GenerateAsp(config, rng);
  }
  throw Error(ErrorCode::kConfig, "unknown family");
}

}  // namespace recsp
