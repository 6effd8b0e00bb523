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

// Exact piecewise-linear function algebra on [0,1].
//
// Every continuous function on X = [0,1] handled by the library is a PLFunc:
// a list of rational breakpoints 0 = x_0 < ... < x_m = 1 with a rational value
// at each, interpolated affinely in between. Lattice operations (min, max),
// sums and scalings are closed on this class once the crossing points of the
// operands are inserted, and all of them are computed exactly.

#include <optional>
#include <span>
#include <vector>

#include "hahnforge/rational.hpp"

namespace hahnforge {

// Outcome of a decidable predicate. When `holds` is false, `witness` carries
// a point (or threshold) that refutes it.
struct Verdict {
  bool holds = true;
  std::optional<Rat> witness;

  static Verdict yes() { return {}; }
  static Verdict no(Rat w) { return {false, std::move(w)}; }
  explicit operator bool() const { return holds; }
};

class PLFunc {
 public:
  // Throws std::invalid_argument unless breakpoints start at 0, end at 1 and
  // strictly increase, and values has the same length. The stored form is
  // canonical: interior breakpoints lying on the segment through their
  // neighbours are dropped, so operator== is functional equality.
  PLFunc(std::vector<Rat> breakpoints, std::vector<Rat> values);

  static PLFunc constant(const Rat& c);
  static PLFunc identity();
  // x -> slope * x + intercept.
  static PLFunc affine(const Rat& slope, const Rat& intercept);

  const std::vector<Rat>& breakpoints() const { return xs_; }
  const std::vector<Rat>& values() const { return ys_; }
  std::size_t size() const { return xs_.size(); }

  // Throws std::domain_error outside [0,1].
  Rat operator()(const Rat& x) const;

  // Slope of the i-th segment [x_i, x_{i+1}].
  Rat slope(std::size_t i) const;

  // Largest |value| (attained at a breakpoint).
  Rat sup_abs() const;

  friend bool operator==(const PLFunc& a, const PLFunc& b) {
    return a.xs_ == b.xs_ && a.ys_ == b.ys_;
  }

 private:
  std::vector<Rat> xs_;
  std::vector<Rat> ys_;
};

Rat eval(const PLFunc& f, const Rat& x);

enum class LatticeOp { kMin, kMax, kSum, kScale, kAbs, kNegate };

// Applies `op` to `args`. min/max/sum fold over all arguments; scale, abs and
// negate are unary and require exactly one argument. `scale` is the factor
// for kScale. Throws std::invalid_argument on an empty or mis-sized argument
// list.
PLFunc lattice_combine(LatticeOp op, std::span<const PLFunc> args, const Rat& scale = Rat(0));

PLFunc pl_min(const PLFunc& a, const PLFunc& b);
PLFunc pl_max(const PLFunc& a, const PLFunc& b);
PLFunc pl_min(std::span<const PLFunc> fs);
PLFunc pl_max(std::span<const PLFunc> fs);
PLFunc pl_abs(const PLFunc& f);
PLFunc operator+(const PLFunc& a, const PLFunc& b);
PLFunc operator-(const PLFunc& a, const PLFunc& b);
PLFunc operator-(const PLFunc& f);
PLFunc operator*(const Rat& c, const PLFunc& f);

// The points k/(points-1), k = 0..points-1. 65 points give the dyadic grid
// of step 1/64. Throws std::invalid_argument for points < 2.
std::vector<Rat> uniform_grid(std::size_t points);

// Sorted union of the breakpoints of a and b.
std::vector<Rat> merged_grid(const PLFunc& a, const PLFunc& b);

// Closed rational interval [lo, hi] inside [0,1]; lo == hi is a point.
struct RatInterval {
  Rat lo;
  Rat hi;
  friend bool operator==(const RatInterval&, const RatInterval&) = default;
};

// Finite union of pairwise-disjoint closed intervals and points in [0,1],
// stored sorted with touching/overlapping components merged.
class RatSet {
 public:
  RatSet() = default;
  // Normalises (sorts, merges). Throws std::invalid_argument if some
  // component has lo > hi or leaves [0,1].
  explicit RatSet(std::vector<RatInterval> components);

  static RatSet full();
  static RatSet point(const Rat& x);
  static RatSet interval(const Rat& lo, const Rat& hi);

  const std::vector<RatInterval>& components() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(const Rat& x) const;

  RatSet unite(const RatSet& other) const;
  RatSet intersect(const RatSet& other) const;

  friend bool operator==(const RatSet&, const RatSet&) = default;

 private:
  std::vector<RatInterval> parts_;
};

// {x in [0,1] : f(x) = g(x)}, exactly.
RatSet equality_set(const PLFunc& f, const PLFunc& g);

// x -> min(1, dist(x, S)); the constant 1 when S is empty.
PLFunc distance_function(const RatSet& s);

// f <= g everywhere on [0,1]. On failure the witness is the first merged
// breakpoint where f > g.
Verdict dominates(const PLFunc& f, const PLFunc& g);

// Piecewise-affine function on [0,1] that may jump at its breakpoints.
// Each open piece (x_i, x_{i+1}) is affine and stored by its one-sided
// limits; the value at each breakpoint is stored separately.
class PwFunc {
 public:
  struct Piece {
    Rat right_of_start;  // limit at x_i from the right
    Rat left_of_end;     // limit at x_{i+1} from the left
    friend bool operator==(const Piece&, const Piece&) = default;
  };

  // Throws std::invalid_argument on a malformed partition or size mismatch.
  PwFunc(std::vector<Rat> partition, std::vector<Piece> pieces, std::vector<Rat> point_values);

  static PwFunc from_pl(const PLFunc& f);
  // Indicator of [lo, hi] (closed), as a usc step function.
  static PwFunc indicator(const Rat& lo, const Rat& hi);

  const std::vector<Rat>& partition() const { return xs_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  const std::vector<Rat>& point_values() const { return points_; }

  // Throws std::domain_error outside [0,1].
  Rat operator()(const Rat& x) const;

  PwFunc negated() const;

  friend bool operator==(const PwFunc&, const PwFunc&) = default;

 private:
  std::vector<Rat> xs_;
  std::vector<Piece> pieces_;
  std::vector<Rat> points_;
};

enum class Semicontinuity { kUpper, kLower };

// usc: at every breakpoint the point value is >= each existing one-sided
// limit; lsc dually. Witness is the first offending breakpoint.
Verdict semicontinuity_check(const PwFunc& f, Semicontinuity kind);

}  // namespace hahnforge
