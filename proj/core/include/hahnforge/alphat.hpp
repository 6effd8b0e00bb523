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

// Functions on the Alexandroff compactification aT = T u {inf} of a discrete
// set T of arbitrary cardinality. A function is its value at infinity plus a
// finite list of disjoint exception blocks; uncountable blocks are symbolic
// tags and are never enumerated, so every predicate below is decided by case
// analysis on block kinds.

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hahnforge/plalg.hpp"
#include "hahnforge/rational.hpp"
#include "hahnforge/sequences.hpp"

namespace hahnforge {

// Explicit finite set of atoms sharing one value.
struct FiniteBlock {
  std::vector<std::string> atoms;
  Rat value;
  friend bool operator==(const FiniteBlock&, const FiniteBlock&) = default;
};

// Countable block name_1, name_2, ... with name_n -> base + deviation(n).
// The values converge to `base`.
struct TailBlock {
  std::string name;
  Rat base;
  NullSequence deviation;

  Rat value(std::uint64_t n) const { return Rat(base + deviation(n)); }
  friend bool operator==(const TailBlock&, const TailBlock&) = default;
};

// Symbolic uncountable block on which the function is constant.
struct UncountableBlock {
  std::string tag;
  Rat value;
  friend bool operator==(const UncountableBlock&, const UncountableBlock&) = default;
};

using AlphaTBlock = std::variant<FiniteBlock, TailBlock, UncountableBlock>;

// A point of aT for evaluation.
struct AlphaTPoint {
  enum class Kind { kInfinity, kAtom, kTail, kUncountable };
  Kind kind = Kind::kInfinity;
  std::string name;    // atom name, tail name or uncountable tag
  std::uint64_t n = 0;  // tail position

  static AlphaTPoint infinity() { return {}; }
  static AlphaTPoint atom(std::string a) { return {Kind::kAtom, std::move(a), 0}; }
  static AlphaTPoint tail(std::string name, std::uint64_t n) { return {Kind::kTail, std::move(name), n}; }
  static AlphaTPoint in_block(std::string tag) { return {Kind::kUncountable, std::move(tag), 0}; }
};

class AlphaTFunc {
 public:
  // Throws std::invalid_argument if two blocks share an atom, a tail name or
  // a tag, or if an uncountable/tail block has an empty name.
  AlphaTFunc(Rat limit, std::vector<AlphaTBlock> blocks);

  static AlphaTFunc constant(const Rat& c) { return AlphaTFunc(c, {}); }

  const Rat& limit() const { return limit_; }
  const std::vector<AlphaTBlock>& blocks() const { return blocks_; }

  // Points not covered by any block take the limit value.
  Rat operator()(const AlphaTPoint& p) const;

  friend bool operator==(const AlphaTFunc&, const AlphaTFunc&) = default;

 private:
  Rat limit_;
  std::vector<AlphaTBlock> blocks_;
};

// Countable subset of T: explicit atoms plus whole tail blocks (by name).
struct CountableSet {
  std::vector<std::string> atoms;
  std::vector<std::string> tails;

  CountableSet unite(const CountableSet& other) const;
  bool empty() const { return atoms.empty() && tails.empty(); }
  std::string to_string() const;
  friend bool operator==(const CountableSet&, const CountableSet&) = default;
};

// Continuity on aT: for every eps > 0 only finitely many atoms deviate from
// the limit by eps or more. The witness is an eps with infinitely many
// deviations.
Verdict at_is_continuous(const AlphaTFunc& f);

// A countable S off which f equals its limit, or std::nullopt when some
// uncountable block carries another value (then f is not Baire one).
std::optional<CountableSet> at_baire_one_cocountable(const AlphaTFunc& f);

class StabilizingSetError : public std::invalid_argument {
 public:
  explicit StabilizingSetError(std::size_t index)
      : std::invalid_argument("family member " + std::to_string(index) +
                              " is not constant off a countable set"),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// Union of the members' cocountable-constancy sets. Throws
// StabilizingSetError (0-based index) for the first member that has none.
CountableSet stabilizing_set(std::span<const AlphaTFunc> family);

// Diagonal product functions ---------------------------------------------------

enum class Cardinality { kEmpty, kUncountable };

struct DiagBlock {
  std::string tag;
  Cardinality cardinality = Cardinality::kUncountable;
  Rat diagonal;  // value of f(t, t) for t in this block
};

// f on aT x aT with T = T0 u T1 u T2: f(t,t) = blocks[i].diagonal for t in
// block i, and 0 everywhere else (including any coordinate at infinity).
struct DiagProductFunc {
  std::array<DiagBlock, 3> blocks;
};

// A point of aT for a DiagProductFunc: infinity, or a named atom of a block.
struct DiagPoint {
  std::optional<std::size_t> block;
  std::string atom;

  static DiagPoint infinity() { return {}; }
  static DiagPoint in(std::size_t block, std::string atom) { return {block, std::move(atom)}; }
};

// T0, T1, T2 uncountable with diagonal values 0, 1, -1.
DiagProductFunc diag_example();

// f(x, y), evaluated symbolically.
Rat diag_value(const DiagProductFunc& f, const DiagPoint& x, const DiagPoint& y);

// f^x as a function on aT. Throws std::invalid_argument for a point of an
// empty block.
AlphaTFunc x_section(const DiagProductFunc& f, const DiagPoint& x);
// f_y; the same as x_section since f is symmetric.
AlphaTFunc y_section(const DiagProductFunc& f, const DiagPoint& y);

struct ExtremalSections {
  AlphaTFunc min;
  AlphaTFunc max;
};

// Minimal and maximal sections, blockwise.
ExtremalSections at_sections(const DiagProductFunc& f);

}  // namespace hahnforge
