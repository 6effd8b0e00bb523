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

// Stable pairs of Hahn over finite families of PL functions.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hahnforge/plalg.hpp"

namespace hahnforge {

// Nonempty ordered family u_1, ..., u_N.
class StableFamily {
 public:
  // Throws std::invalid_argument for an empty family.
  explicit StableFamily(std::vector<PLFunc> members);

  const std::vector<PLFunc>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  // 1-based.
  const PLFunc& member(std::size_t n) const { return members_.at(n - 1); }

 private:
  std::vector<PLFunc> members_;
};

// g = min of the family, h = max of the family.
struct HahnPair {
  StableFamily family;
  PLFunc g;
  PLFunc h;
};

HahnPair envelopes(const StableFamily& u);

// Smallest k such that the partial envelopes min/max over u_1..u_k already
// equal g(x) and h(x). From k on the partial envelopes at x are constant.
std::size_t stability_witness(const StableFamily& u, const Rat& x);

// theta = u_1, which always lies between the envelopes. Throws
// std::logic_error if it does not (the pair was not built by envelopes()).
PLFunc insert_intermediate(const HahnPair& p);

// Raised when an argument of constrained_approximants breaks its
// precondition; `witness` is a point of [0,1] where it fails.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(const std::string& what, Rat witness)
      : std::invalid_argument(what), witness_(std::move(witness)) {}
  const Rat& witness() const { return witness_; }

 private:
  Rat witness_;
};

struct Approximants {
  PLFunc lower;  // u_n = max(g_n, f0 - n*phi)
  PLFunc upper;  // v_n = min(h_n, f0 + n*phi)
};

// Approximants of the constrained extension: n is 1-based and indexes gseq
// and hseq. Requires phi >= 0, gseq pointwise non-increasing and hseq
// pointwise non-decreasing; violations throw PreconditionError.
Approximants constrained_approximants(const std::vector<PLFunc>& gseq,
                                      const std::vector<PLFunc>& hseq, const PLFunc& f0,
                                      const PLFunc& phi, std::size_t n);

}  // namespace hahnforge
