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

#ifndef RECSP_RANDOM_H_
#define RECSP_RANDOM_H_

#include <cstdint>

namespace recsp {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen because its recurrence is a
// few lines in any language, so generated corpora can be reproduced
// bit-for-bit elsewhere:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t Next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [lo, hi]; requires lo <= hi. Rejection sampling on
  // Next() % span, discarding draws at or above the largest multiple of span.
  int64_t Uniform(int64_t lo, int64_t hi) {
    const uint64_t span =
        static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
    if (span == 0) return static_cast<int64_t>(Next());  // Full 64-bit range.
    const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t draw;
    do {
      draw = Next();
    } while (draw >= limit);
    return static_cast<int64_t>(static_cast<uint64_t>(lo) + draw % span);
  }

  // True with probability numerator / denominator.
  bool Chance(int64_t numerator, int64_t denominator) {
    return Uniform(0, denominator - 1) < numerator;
  }

 private:
  uint64_t state_;
};

}  // namespace recsp

#endif  // RECSP_RANDOM_H_
