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

// Synthesis of a separately continuous f : [0,1] x alphaN -> Q whose minimal
// and maximal sections are the envelopes of a given finite stable family.
//
// The construction stacks one Schwartz block per family member. Block n
// lives on its own infinite support G_n (odd multiples of 2^(n-1)), vanishes
// on F_{n-1} x alphaN, and on x outside F_{n-1} reaches the stage envelopes
// G_n(x) and H_n(x) at two explicit points of G_n. Everything is exact.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hahnforge/pairs.hpp"
#include "hahnforge/plalg.hpp"
#include "hahnforge/spaces.hpp"

namespace hahnforge {

// sp(s,t) = 2st / (s^2 + t^2), and 0 at the origin.
Rat schwartz(const Rat& s, const Rat& t);

// 1 where |sp(s,t)| >= 1/2, else 2|sp(s,t)|. Takes values in [0,1].
Rat phi(const Rat& s, const Rat& t);

// beta on alphaN: y_{2k-1} -> 1/k, y_{2k} -> -1/k on the enumerated support,
// 0 elsewhere and at infinity.
struct BumpMap {
  AlphaNSubset support;

  // y_j, 1-based.
  std::uint64_t point(std::uint64_t j) const { return support.element(j); }
  Rat operator()(AlphaNPoint y) const;
};

// Throws std::invalid_argument for a finite set.
BumpMap oscillating_bump(const AlphaNSet& g);

struct SchwartzBlock {
  PLFunc lower;      // stage envelope G_n <= 0
  PLFunc upper;      // stage envelope H_n >= 0
  PLFunc alpha;      // min(1, dist(., vanishing)), zero exactly on `vanishing`
  BumpMap beta;
  RatSet vanishing;  // A = F_{n-1}

  // lower(x) * phi(alpha(x), beta(y)) if beta(y) < 0, else
  // upper(x) * phi(alpha(x), beta(y)).
  Rat operator()(const Rat& x, AlphaNPoint y) const;

  // For x outside `vanishing`: (argmax, argmin) = (y_{2n-1}, y_{2n}) with
  // n = floor(1 / alpha(x)), where the block equals upper(x) and lower(x).
  // std::nullopt on `vanishing`.
  std::optional<std::pair<AlphaNPoint, AlphaNPoint>> witnesses(const Rat& x) const;
};

// Throws PreconditionError unless lower <= 0 <= upper.
SchwartzBlock hahn_block(const PLFunc& lower, const PLFunc& upper, const RatSet& a,
                         const AlphaNSet& g);

// theta + sum of blocks with pairwise disjoint supports in alphaN.
class BlockProductFunc {
 public:
  // Throws std::invalid_argument if supports overlap, the stage count does
  // not match the block count, stages do not increase, or the last stage is
  // not [0,1].
  BlockProductFunc(PLFunc theta, std::vector<SchwartzBlock> blocks, std::vector<RatSet> stages);

  const PLFunc& theta() const { return theta_; }
  const std::vector<SchwartzBlock>& blocks() const { return blocks_; }
  // F_1, ..., F_N.
  const std::vector<RatSet>& stages() const { return stages_; }

  // f(x, y) = theta(x) + shifted(x, y).
  Rat operator()(const Rat& x, AlphaNPoint y) const;
  // Sum of the blocks; 0 at y = infinity.
  Rat shifted(const Rat& x, AlphaNPoint y) const;
  // 0-based block whose support contains y.
  std::optional<std::size_t> block_for(AlphaNPoint y) const;
  // Smallest n (1-based) with x in F_n.
  std::size_t active_stage(const Rat& x) const;

 private:
  PLFunc theta_;
  std::vector<SchwartzBlock> blocks_;
  std::vector<RatSet> stages_;
};

// Intermediate data of the synthesis, exposed for inspection.
struct StageEnvelopes {
  PLFunc theta;                // u_1
  std::vector<PLFunc> shifted;  // u_m - theta
  PLFunc lower_env;            // min of shifted (<= 0)
  PLFunc upper_env;            // max of shifted (>= 0)
  std::vector<PLFunc> lower;   // G_n = min(0, min_{m<=n} shifted_m)
  std::vector<PLFunc> upper;   // H_n = max(0, max_{m<=n} shifted_m)
  std::vector<RatSet> stages;  // F_n = union_{j,k<=n} A_j n B_k
};

StageEnvelopes stage_envelopes(const StableFamily& u);

BlockProductFunc synthesize(const StableFamily& u);

// Finite E such that |f(x,y) - f(x,inf)| < eps for every y outside E, in
// increasing order. Throws std::invalid_argument for eps <= 0.
std::vector<std::uint64_t> continuity_certificate(const BlockProductFunc& f, const Rat& x,
                                                  const Rat& eps);

struct SectionExtrema {
  Rat min;
  Rat max;
  AlphaNPoint argmin;
  AlphaNPoint argmax;
};

// Exact min and max of f(x, .) over alphaN, found by enumerating the
// exception sets of continuity_certificate with shrinking eps.
SectionExtrema exact_section_extrema(const BlockProductFunc& f, const Rat& x);

struct SectionRow {
  Rat x;
  Rat g;
  Rat h;
  std::size_t stage = 0;
  AlphaNPoint argmin;
  AlphaNPoint argmax;
};

struct SectionFailure {
  Rat x;
  std::optional<AlphaNPoint> y;
  Rat value;
  std::string message;
};

struct SectionReport {
  std::vector<SectionRow> rows;
  std::vector<SectionFailure> failures;
  bool passed() const { return failures.empty(); }
};

// Checks g <= f(x, .) <= h (structurally on the block envelopes, and by spot
// evaluation), exact attainment at the active block's witnesses, and that
// exact_section_extrema returns g(x) and h(x), for every grid point.
SectionReport verify_synthesis(const BlockProductFunc& f, const StableFamily& u,
                               const std::vector<Rat>& grid);

}  // namespace hahnforge
