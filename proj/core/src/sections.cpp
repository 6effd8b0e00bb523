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

#include "hahnforge/sections.hpp"

#include <stdexcept>

namespace hahnforge {

namespace {

struct Candidate {
  AlphaNPoint label;
  PLFunc slice;
};

// Candidates in witness-preference order: head indices, then N+1, then inf.
std::vector<Candidate> extremal_candidates(const TailFamily& f) {
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < f.head.size(); ++i) out.push_back({AlphaNPoint::at(i + 1), f.head[i]});
  const AlphaNPoint next = AlphaNPoint::at(f.head.size() + 1);
  out.push_back({next, f.slice(next)});
  out.push_back({AlphaNPoint::infinity(), f.limit});
  return out;
}

}  // namespace

PLFunc TailFamily::slice(AlphaNPoint y) const {
  if (y.is_infinity()) return limit;
  if (y.index <= head.size()) return head[y.index - 1];
  return limit + coeff(y.index) * shape;
}

Rat TailFamily::value(AlphaNPoint y, const Rat& x) const {
  if (y.is_infinity()) return limit(x);
  if (y.index <= head.size()) return head[y.index - 1](x);
  return Rat(limit(x) + coeff(y.index) * shape(x));
}

SectionPair tail_sections(const TailFamily& f, std::span<const Rat> grid) {
  const std::vector<Candidate> cands = extremal_candidates(f);
  std::vector<PLFunc> slices;
  slices.reserve(cands.size());
  for (const auto& c : cands) slices.push_back(c.slice);
  const PLFunc g = pl_min(slices);
  const PLFunc h = pl_max(slices);

  SectionPair out{PwFunc::from_pl(g), PwFunc::from_pl(h), {}};
  out.samples.reserve(grid.size());
  for (const Rat& x : grid) {
    SectionSample s{x, g(x), h(x), {}, {}};
    bool have_min = false;
    bool have_max = false;
    for (const auto& c : cands) {
      const Rat v = c.slice(x);
      if (!have_min && v == s.g) {
        s.argmin = c.label;
        have_min = true;
      }
      if (!have_max && v == s.h) {
        s.argmax = c.label;
        have_max = true;
      }
    }
    if (!have_min || !have_max) throw std::logic_error("section value not attained by a candidate");
    out.samples.push_back(std::move(s));
  }
  return out;
}

BruteSections brute_sections(const TailFamily& f, std::uint64_t m, std::span<const Rat> grid) {
  if (m <= f.head.size()) throw std::invalid_argument("brute_sections needs M > N");

  std::vector<PLFunc> slices;
  slices.reserve(m + 1);
  for (std::uint64_t n = 1; n <= m; ++n) slices.push_back(f.slice(AlphaNPoint::at(n)));
  slices.push_back(f.limit);

  SectionPair sections{PwFunc::from_pl(pl_min(slices)), PwFunc::from_pl(pl_max(slices)), {}};
  sections.samples.reserve(grid.size());
  for (const Rat& x : grid) {
    SectionSample s{x, f.value(AlphaNPoint::at(1), x), Rat(0), AlphaNPoint::at(1),
                    AlphaNPoint::at(1)};
    s.h = s.g;
    auto consider = [&](AlphaNPoint y) {
      const Rat v = f.value(y, x);
      if (v < s.g) {
        s.g = v;
        s.argmin = y;
      }
      if (v > s.h) {
        s.h = v;
        s.argmax = y;
      }
    };
    for (std::uint64_t n = 2; n <= m; ++n) consider(AlphaNPoint::at(n));
    consider(AlphaNPoint::infinity());
    sections.samples.push_back(std::move(s));
  }
  Rat bound = rat_abs(f.coeff(m + 1)) * f.shape.sup_abs();
  return {std::move(sections), std::move(bound)};
}

StableFamily to_stable_family(const TailFamily& f) {
  std::vector<PLFunc> members = f.head;
  members.push_back(f.limit);
  members.push_back(f.slice(AlphaNPoint::at(f.head.size() + 1)));
  return StableFamily(std::move(members));
}

}  // namespace hahnforge
