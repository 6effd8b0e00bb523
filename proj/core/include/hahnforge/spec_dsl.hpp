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

// Text format for stable families and tail rules.
//
//   # two members
//   u1 = 0
//   u2 = x - 1/2
//   grid 65
//
// One statement per line: `name = expr`, `grid N`, `limit expr`, or
// `tail zero | tail harmonic(c) * expr | tail geometric(c, q) * expr`.
// Expressions are built from rationals, x, earlier names, + and -, scaling
// by a constant (c * e, e * c, e / c), min(...), max(...) and abs(...), so
// every expression denotes a PL function on [0,1].

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hahnforge/pairs.hpp"
#include "hahnforge/plalg.hpp"
#include "hahnforge/sections.hpp"
#include "hahnforge/sequences.hpp"

namespace hahnforge {

struct Diagnostic {
  enum class Kind { kSyntax, kUndeclaredName, kNonPL, kDuplicateName, kDivisionByZero, kBadDirective };
  Kind kind = Kind::kSyntax;
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
  std::string message;
  std::string expected;  // what the parser was looking for, may be empty
};

class SpecError : public std::runtime_error {
 public:
  explicit SpecError(Diagnostic d);
  const Diagnostic& diagnostic() const { return diag_; }

 private:
  Diagnostic diag_;
};

// Expression tree. Scaling by a constant is normalised to kScale whichever
// way it was written; constant subexpressions used as factors are folded.
struct Expr {
  enum class Kind { kConst, kVar, kRef, kAdd, kSub, kNeg, kScale, kMin, kMax, kAbs };
  Kind kind = Kind::kConst;
  Rat value;              // kConst value, kScale factor
  std::string name;       // kRef
  std::vector<Expr> args;

  static Expr constant(const Rat& c) { return {Kind::kConst, c, {}, {}}; }
  static Expr var() { return {Kind::kVar, Rat(0), {}, {}}; }
  static Expr ref(std::string n) { return {Kind::kRef, Rat(0), std::move(n), {}}; }
  static Expr node(Kind k, std::vector<Expr> args, const Rat& factor = Rat(0)) {
    return {k, factor, {}, std::move(args)};
  }

  friend bool operator==(const Expr&, const Expr&) = default;
};

struct Declaration {
  std::string name;
  Expr expr;
  std::size_t line = 0;
  friend bool operator==(const Declaration& a, const Declaration& b) {
    return a.name == b.name && a.expr == b.expr;
  }
};

struct TailRule {
  NullSequence coeff;
  Expr shape;  // the constant 0 for `tail zero`
  friend bool operator==(const TailRule&, const TailRule&) = default;
};

struct SpecAST {
  std::vector<Declaration> family;
  std::optional<std::uint64_t> grid;
  std::optional<Expr> limit;
  std::optional<TailRule> tail;
  friend bool operator==(const SpecAST&, const SpecAST&) = default;
};

// Throws SpecError on the first problem.
SpecAST parse_spec(std::string_view text);

// Canonical text; parse_spec(pretty_print(a)) == a.
std::string pretty_print(const SpecAST& spec);
std::string pretty_print(const Expr& e);

struct ElaboratedSpec {
  std::vector<std::string> names;
  std::vector<PLFunc> members;
  std::optional<std::uint64_t> grid;
  // Present when the spec has a `limit` or `tail` line.
  std::optional<TailFamily> tail_family;

  // Throws SpecError (line 1, column 1) when no member is declared.
  StableFamily family() const;
};

// Throws SpecError for a tail rule without a limit.
ElaboratedSpec elaborate(const SpecAST& spec);

// Convenience: parse_spec followed by elaborate.
ElaboratedSpec load_spec(std::string_view text);

}  // namespace hahnforge
