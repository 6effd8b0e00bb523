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

#include "hahnforge/alphat.hpp"

#include <algorithm>
#include <set>

namespace hahnforge {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::vector<std::string> sorted_union(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
  std::set<std::string> all(a.begin(), a.end());
  all.insert(b.begin(), b.end());
  return {all.begin(), all.end()};
}

}  // namespace

AlphaTFunc::AlphaTFunc(Rat limit, std::vector<AlphaTBlock> blocks)
    : limit_(std::move(limit)), blocks_(std::move(blocks)) {
  std::set<std::string> atoms;
  std::set<std::string> names;
  for (const auto& b : blocks_) {
    std::visit(Overloaded{
                   [&](const FiniteBlock& fb) {
                     for (const auto& a : fb.atoms) {
                       if (!atoms.insert(a).second) {
                         throw std::invalid_argument("atom '" + a + "' appears in two blocks");
                       }
                     }
                   },
                   [&](const TailBlock& tb) {
                     if (tb.name.empty() || !names.insert(tb.name).second) {
                       throw std::invalid_argument("tail block name empty or repeated");
                     }
                   },
                   [&](const UncountableBlock& ub) {
                     if (ub.tag.empty() || !names.insert(ub.tag).second) {
                       throw std::invalid_argument("uncountable block tag empty or repeated");
                     }
                   },
               },
               b);
  }
}

Rat AlphaTFunc::operator()(const AlphaTPoint& p) const {
  using Kind = AlphaTPoint::Kind;
  for (const auto& b : blocks_) {
    if (const auto* fb = std::get_if<FiniteBlock>(&b); fb && p.kind == Kind::kAtom) {
      if (std::find(fb->atoms.begin(), fb->atoms.end(), p.name) != fb->atoms.end()) return fb->value;
    }
    if (const auto* tb = std::get_if<TailBlock>(&b); tb && p.kind == Kind::kTail) {
      if (tb->name == p.name) return tb->value(p.n);
    }
    if (const auto* ub = std::get_if<UncountableBlock>(&b); ub && p.kind == Kind::kUncountable) {
      if (ub->tag == p.name) return ub->value;
    }
  }
  return limit_;
}

CountableSet CountableSet::unite(const CountableSet& other) const {
  return {sorted_union(atoms, other.atoms), sorted_union(tails, other.tails)};
}

std::string CountableSet::to_string() const {
  std::string out = "{";
  auto add = [&](const std::string& s) {
    if (out.size() > 1) out += ", ";
    out += s;
  };
  for (const auto& a : atoms) add(a);
  for (const auto& t : tails) add(t + "_n (n>=1)");
  return out + "}";
}

Verdict at_is_continuous(const AlphaTFunc& f) {
  for (const auto& b : f.blocks()) {
    // Finite blocks never matter; the others are constant-or-convergent and
    // fail exactly when their limiting value differs from f(inf).
    const Rat* tail_value = nullptr;
    if (const auto* tb = std::get_if<TailBlock>(&b)) tail_value = &tb->base;
    if (const auto* ub = std::get_if<UncountableBlock>(&b)) tail_value = &ub->value;
    if (tail_value && *tail_value != f.limit()) {
      return Verdict::no(Rat(rat_abs(*tail_value - f.limit()) / 2));
    }
  }
  return Verdict::yes();
}

std::optional<CountableSet> at_baire_one_cocountable(const AlphaTFunc& f) {
  CountableSet s;
  for (const auto& b : f.blocks()) {
    if (const auto* fb = std::get_if<FiniteBlock>(&b)) {
      s = s.unite({fb->atoms, {}});
    } else if (const auto* tb = std::get_if<TailBlock>(&b)) {
      s = s.unite({{}, {tb->name}});
    } else if (std::get<UncountableBlock>(b).value != f.limit()) {
      return std::nullopt;
    }
  }
  return s;
}

CountableSet stabilizing_set(std::span<const AlphaTFunc> family) {
  CountableSet s;
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto si = at_baire_one_cocountable(family[i]);
    if (!si) throw StabilizingSetError(i);
    s = s.unite(*si);
  }
  return s;
}

// Diagonal product functions ---------------------------------------------------

DiagProductFunc diag_example() {
  return DiagProductFunc{{
      DiagBlock{"T0", Cardinality::kUncountable, Rat(0)},
      DiagBlock{"T1", Cardinality::kUncountable, Rat(1)},
      DiagBlock{"T2", Cardinality::kUncountable, Rat(-1)},
  }};
}

Rat diag_value(const DiagProductFunc& f, const DiagPoint& x, const DiagPoint& y) {
  if (!x.block || !y.block) return 0;
  if (*x.block != *y.block || x.atom != y.atom) return 0;
  return f.blocks.at(*x.block).diagonal;
}

AlphaTFunc x_section(const DiagProductFunc& f, const DiagPoint& x) {
  if (!x.block) return AlphaTFunc::constant(Rat(0));
  const DiagBlock& b = f.blocks.at(*x.block);
  if (b.cardinality == Cardinality::kEmpty) {
    throw std::invalid_argument("block " + b.tag + " is empty");
  }
  if (b.diagonal == 0) return AlphaTFunc::constant(Rat(0));
  return AlphaTFunc(Rat(0), {FiniteBlock{{x.atom}, b.diagonal}});
}

AlphaTFunc y_section(const DiagProductFunc& f, const DiagPoint& y) { return x_section(f, y); }

ExtremalSections at_sections(const DiagProductFunc& f) {
  // At x in T_i the section f^x takes the values {diagonal_i, 0}; at
  // infinity it is identically 0.
  std::vector<AlphaTBlock> lows;
  std::vector<AlphaTBlock> highs;
  for (const auto& b : f.blocks) {
    if (b.cardinality == Cardinality::kEmpty) continue;
    Rat lo = rat_min(b.diagonal, Rat(0));
    Rat hi = rat_max(b.diagonal, Rat(0));
    if (lo != 0) lows.emplace_back(UncountableBlock{b.tag, lo});
    if (hi != 0) highs.emplace_back(UncountableBlock{b.tag, hi});
  }
  return {AlphaTFunc(Rat(0), std::move(lows)), AlphaTFunc(Rat(0), std::move(highs))};
}

}  // namespace hahnforge
