// Copyright 2026 The HahnForge Authors
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

#pragma once

#include <cstdint>

#include "hahnforge/rational.hpp"

namespace hahnforge {

// Null sequence n -> c/n, n -> c*q^n (0 < q < 1), or n -> 0, for n >= 1.
// |value(n)| is non-increasing and the sign is constant, which is what makes
// extrema over a tail {n > N} computable in closed form.
struct NullSequence {
  enum class Kind { kZero, kHarmonic, kGeometric };

  Kind kind = Kind::kZero;
  Rat coefficient = 0;
  Rat ratio = 0;

  static NullSequence zero() { return {}; }
  static NullSequence harmonic(const Rat& c) { return {Kind::kHarmonic, c, Rat(0)}; }
  // Throws std::invalid_argument unless 0 < q < 1.
  static NullSequence geometric(const Rat& c, const Rat& q);

  // Throws std::invalid_argument for n == 0.
  Rat operator()(std::uint64_t n) const;

  bool is_identically_zero() const { return kind == Kind::kZero || coefficient == 0; }

  friend bool operator==(const NullSequence&, const NullSequence&) = default;
};

}  // namespace hahnforge
