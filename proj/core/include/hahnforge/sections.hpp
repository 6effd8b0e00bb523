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

// Minimal and maximal sections of separately continuous functions on
// [0,1] x alphaN. Such a function is given by its slices u_n = f(., n) and
// u_inf = f(., inf); a TailFamily describes them as a finite head followed
// by a convergent tail u_n = limit + c(n) * shape.

#include <cstdint>
#include <span>
#include <vector>

#include "hahnforge/pairs.hpp"
#include "hahnforge/plalg.hpp"
#include "hahnforge/sequences.hpp"
#include "hahnforge/spaces.hpp"

namespace hahnforge {

struct TailFamily {
  std::vector<PLFunc> head;  // u_1, ..., u_N (N may be 0)
  PLFunc limit;              // u_inf
  NullSequence coeff;        // c(n), used for n > N
  PLFunc shape;              // w

  std::size_t head_size() const { return head.size(); }
  // The slice u_y; throws std::invalid_argument for y == 0 via AlphaNPoint.
  PLFunc slice(AlphaNPoint y) const;
  // f(x, y) computed pointwise, without building the slice.
  Rat value(AlphaNPoint y, const Rat& x) const;
};

struct SectionSample {
  Rat x;
  Rat g;
  Rat h;
  AlphaNPoint argmin;
  AlphaNPoint argmax;
};

struct SectionPair {
  PwFunc g;
  PwFunc h;
  std::vector<SectionSample> samples;
};

// Exact sections. Because |c(n)| is non-increasing with constant sign, the
// extrema over the tail {n > N} u {inf} are attained at N+1 or at inf.
// Witnesses are the smallest attaining index, with inf ranked last.
SectionPair tail_sections(const TailFamily& f, std::span<const Rat> grid);

struct BruteSections {
  SectionPair sections;
  // |c(M+1)| * sup|w|: the true sections differ from these by at most this.
  Rat tail_bound;
};

// Sections over the indices 1..M and inf only, by direct enumeration.
// Throws std::invalid_argument unless M > N.
BruteSections brute_sections(const TailFamily& f, std::uint64_t m, std::span<const Rat> grid);

// head, limit, limit + c(N+1) * w as a finite family: its envelopes are the
// sections of f.
StableFamily to_stable_family(const TailFamily& f);

}  // namespace hahnforge
