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

// Concrete compact spaces used on the Y side: the one-point compactification
// of the naturals (alphaN), ordinal intervals [0, top] below w^w, and the
// disjoint open families both of them carry.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hahnforge/rational.hpp"

namespace hahnforge {

// Ordinals ------------------------------------------------------------------

struct OrdinalTerm {
  unsigned exponent = 0;
  std::uint64_t coefficient = 1;
  friend bool operator==(const OrdinalTerm&, const OrdinalTerm&) = default;
};

// Ordinal below w^w in Cantor normal form: sum of w^exponent * coefficient
// with strictly decreasing exponents. The empty term list is 0.
class OrdinalCNF {
 public:
  OrdinalCNF() = default;
  // Throws std::invalid_argument unless exponents strictly decrease and
  // coefficients are positive.
  explicit OrdinalCNF(std::vector<OrdinalTerm> terms);

  static OrdinalCNF finite(std::uint64_t n);
  static OrdinalCNF omega_power(unsigned exponent, std::uint64_t coefficient = 1);

  const std::vector<OrdinalTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const { return terms_.empty() || terms_.front().exponent == 0; }
  // Value of a finite ordinal; throws std::logic_error for infinite ones.
  std::uint64_t finite_value() const;

  // Ordinal (non-commutative) addition.
  friend OrdinalCNF operator+(const OrdinalCNF& a, const OrdinalCNF& b);
  friend std::strong_ordering operator<=>(const OrdinalCNF& a, const OrdinalCNF& b);
  friend bool operator==(const OrdinalCNF&, const OrdinalCNF&) = default;

  // "w^2*3 + w + 4"; "0" for zero.
  std::string to_string() const;

 private:
  std::vector<OrdinalTerm> terms_;
};

class OrdinalParseError : public std::invalid_argument {
 public:
  OrdinalParseError(const std::string& what, std::size_t column)
      : std::invalid_argument(what), column_(column) {}
  // 1-based column of the offending character.
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

// Grammar: term {"+" term}; term := "w" ["^" nat] ["*" nat] | nat.
// Terms are combined with ordinal addition, so "w + w^2" is w^2.
OrdinalCNF parse_ordinal(std::string_view text);

// The order-topology interval [0, top].
struct OrdinalCompact {
  OrdinalCNF top;
  friend bool operator==(const OrdinalCompact&, const OrdinalCompact&) = default;
};

// Derived set (limit points) of [0, top], re-indexed by order type.
// std::nullopt is the empty space (the derivative of a finite interval).
std::optional<OrdinalCompact> cb_derivative(const OrdinalCompact& k);

// Number of derivative steps needed to reach the empty space.
unsigned scattered_rank(const OrdinalCompact& k);

// alphaN --------------------------------------------------------------------

// A point of alphaN = N u {inf}: index >= 1, or 0 for the point at infinity.
struct AlphaNPoint {
  std::uint64_t index = 0;

  static AlphaNPoint infinity() { return {0}; }
  static AlphaNPoint at(std::uint64_t n) { return {n}; }
  bool is_infinity() const { return index == 0; }
  std::string to_string() const { return is_infinity() ? "inf" : std::to_string(index); }
  friend bool operator==(const AlphaNPoint&, const AlphaNPoint&) = default;
};

// Infinite open subset of alphaN (a subset of N, hence open) of one of two
// shapes: the odd multiples of 2^power, or all multiples of 2^power.
struct AlphaNSubset {
  unsigned power = 0;
  bool odd_only = true;

  // k-th element (1-based) in increasing order. Throws std::overflow_error
  // past 2^64 and std::invalid_argument for k == 0.
  std::uint64_t element(std::uint64_t k) const;
  bool contains(std::uint64_t n) const;
  // Position of n in the enumeration; throws std::invalid_argument if absent.
  std::uint64_t index_of(std::uint64_t n) const;

  friend bool operator==(const AlphaNSubset&, const AlphaNSubset&) = default;
};

// Explicit finite subset of N.
struct FiniteIndexSet {
  std::vector<std::uint64_t> members;
  friend bool operator==(const FiniteIndexSet&, const FiniteIndexSet&) = default;
};

using AlphaNSet = std::variant<AlphaNSubset, FiniteIndexSet>;

// Open interval (lo, hi) of [0,1].
struct OpenInterval {
  Rat lo;
  Rat hi;
  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

enum class SpaceKind { kUnitInterval, kAlphaN };

using OpenSet = std::variant<OpenInterval, AlphaNSubset>;

// Pairwise disjoint family of nonempty open sets. Infinite families are
// generated on demand.
class OpenFamily {
 public:
  OpenFamily(SpaceKind space, std::optional<std::size_t> count) : space_(space), count_(count) {}

  SpaceKind space() const { return space_; }
  // std::nullopt for an infinite family.
  std::optional<std::size_t> count() const { return count_; }
  // k-th member, 1-based. Throws std::out_of_range past the end.
  OpenSet member(std::size_t k) const;

 private:
  SpaceKind space_;
  std::optional<std::size_t> count_;
};

// `count` pairwise disjoint nonempty open sets (std::nullopt = infinitely
// many). On alphaN every member is infinite; the infinite family is
// N_k = odd multiples of 2^(k-1), which partitions N. On [0,1] members have
// pairwise disjoint closures. Throws std::invalid_argument for count == 0.
OpenFamily disjoint_opens(SpaceKind space, std::optional<std::size_t> count);

}  // namespace hahnforge
