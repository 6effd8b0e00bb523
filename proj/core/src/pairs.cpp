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

#include "hahnforge/pairs.hpp"

#include <algorithm>
#include <string>

namespace hahnforge {

StableFamily::StableFamily(std::vector<PLFunc> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("a stable family needs at least one member");
}

HahnPair envelopes(const StableFamily& u) {
  return HahnPair{u, pl_min(u.members()), pl_max(u.members())};
}

std::size_t stability_witness(const StableFamily& u, const Rat& x) {
  std::vector<Rat> vals;
  vals.reserve(u.size());
  for (const auto& f : u.members()) vals.push_back(f(x));
  Rat lo = vals.front();
  Rat hi = vals.front();
  for (const auto& v : vals) {
    lo = rat_min(lo, v);
    hi = rat_max(hi, v);
  }
  // k is the later of the first hits of the minimum and the maximum.
  std::size_t first_lo = 0;
  std::size_t first_hi = 0;
  for (std::size_t i = vals.size(); i-- > 0;) {
    if (vals[i] == lo) first_lo = i;
    if (vals[i] == hi) first_hi = i;
  }
  return std::max(first_lo, first_hi) + 1;
}

PLFunc insert_intermediate(const HahnPair& p) {
  const PLFunc& theta = p.family.member(1);
  if (!dominates(p.g, theta) || !dominates(theta, p.h)) {
    throw std::logic_error("first family member escapes the envelopes");
  }
  return theta;
}

Approximants constrained_approximants(const std::vector<PLFunc>& gseq,
                                      const std::vector<PLFunc>& hseq, const PLFunc& f0,
                                      const PLFunc& phi, std::size_t n) {
  if (n == 0 || n > gseq.size() || n > hseq.size()) {
    throw std::out_of_range("approximant index outside the supplied sequences");
  }
  if (auto v = dominates(PLFunc::constant(Rat(0)), phi); !v) {
    throw PreconditionError("phi takes a negative value", *v.witness);
  }
  for (std::size_t k = 0; k + 1 < gseq.size(); ++k) {
    if (auto v = dominates(gseq[k + 1], gseq[k]); !v) {
      throw PreconditionError("g_" + std::to_string(k + 2) + " exceeds g_" + std::to_string(k + 1),
                              *v.witness);
    }
  }
  for (std::size_t k = 0; k + 1 < hseq.size(); ++k) {
    if (auto v = dominates(hseq[k], hseq[k + 1]); !v) {
      throw PreconditionError("h_" + std::to_string(k + 1) + " exceeds h_" + std::to_string(k + 2),
                              *v.witness);
    }
  }
  const Rat scale(static_cast<unsigned long>(n));
  PLFunc spread = scale * phi;
  return {pl_max(gseq[n - 1], f0 - spread), pl_min(hseq[n - 1], f0 + spread)};
}

}  // namespace hahnforge
