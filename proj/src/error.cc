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

#include "recsp/error.h"

namespace recsp {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
      return "ParseError";
    case ErrorCode::kValidation:
      return "ValidationError";
    case ErrorCode::kCyclicGraph:
      return "CyclicGraph";
    case ErrorCode::kNotLayered:
      return "NotLayered";
    case ErrorCode::kNotSeriesParallel:
      return "NotSeriesParallel";
    case ErrorCode::kTooManyPaths:
      return "TooManyPaths";
    case ErrorCode::kInfeasible:
      return "Infeasible";
    case ErrorCode::kOverflow:
      return "Overflow";
    case ErrorCode::kConfig:
      return "ConfigError";
    case ErrorCode::kInternal:
      return "InternalError";
  }
  return "UnknownError";
}

}  // namespace recsp
