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

#ifndef RECSP_COST_VALUE_H_
#define RECSP_COST_VALUE_H_

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>

#include "recsp/error.h"

namespace recsp {

// Extended integer cost: a finite signed 64-bit value or +infinity.
//
// Adding infinity to anything yields infinity. Adding two finite values that
// would leave the representable range throws Error(kOverflow); the raw value
// INT64_MAX is reserved for the sentinel and is never a finite result.
class CostValue {
 public:
  constexpr CostValue() : raw_(kInfinityRaw) {}
  constexpr CostValue(int64_t value) : raw_(value) {  // NOLINT: implicit
    if (value == kInfinityRaw) ThrowOverflow();
  }

  static constexpr CostValue Infinity() { return CostValue(kTag{}); }

  constexpr bool is_finite() const { return raw_ != kInfinityRaw; }
  constexpr bool is_infinite() const { return raw_ == kInfinityRaw; }

  // Requires is_finite().
  int64_t value() const {
    if (!is_finite()) {
      throw Error(ErrorCode::kInternal, "value() called on infinite cost");
    }
    return raw_;
  }

  friend constexpr CostValue operator+(CostValue a, CostValue b) {
    if (a.is_infinite() || b.is_infinite()) return Infinity();
    int64_t sum;
    if (__builtin_add_overflow(a.raw_, b.raw_, &sum) || sum == kInfinityRaw) {
      ThrowOverflow();
    }
    return CostValue(kTag{}, sum);
  }
  CostValue& operator+=(CostValue other) { return *this = *this + other; }

  friend constexpr auto operator<=>(CostValue a, CostValue b) = default;
  friend constexpr bool operator==(CostValue a, CostValue b) = default;

  friend std::ostream& operator<<(std::ostream& os, CostValue c) {
    if (c.is_infinite()) return os << "inf";
    return os << c.raw_;
  }

 private:
  struct kTag {};
  static constexpr int64_t kInfinityRaw = std::numeric_limits<int64_t>::max();

  constexpr explicit CostValue(kTag) : raw_(kInfinityRaw) {}
  constexpr CostValue(kTag, int64_t raw) : raw_(raw) {}

  [[noreturn]] static void ThrowOverflow() {
    throw Error(ErrorCode::kOverflow, "cost arithmetic left the int64 range");
  }

  int64_t raw_;
};

inline constexpr CostValue Min(CostValue a, CostValue b) {
  return b < a ? b : a;
}

}  // namespace recsp

#endif  // RECSP_COST_VALUE_H_
