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

#include "doctest.h"
#include "hahnforge/alphat.hpp"
#include "support/alphat_cases.hpp"

using namespace hahnforge;

namespace {

Rat q(long n, long d = 1) { return make_rat(n, d); }

// Sampling oracle for a failing eps: some block deviates by >= eps at
// arbitrarily late positions (checked at 1000 positions past 10^6), or on an
// uncountable block.
bool deviates_infinitely(const AlphaTFunc& f, const Rat& eps) {
  for (const auto& b : f.blocks()) {
    if (const auto* t = std::get_if<TailBlock>(&b)) {
      bool all = true;
      for (std::uint64_t n = 1'000'000; n < 1'001'000; ++n) {
        all = all && rat_abs(Rat(f(AlphaTPoint::tail(t->name, n)) - f.limit())) >= eps;
      }
      if (all) return true;
    }
    if (const auto* u = std::get_if<UncountableBlock>(&b)) {
      if (rat_abs(Rat(f(AlphaTPoint::in_block(u->tag)) - f.limit())) >= eps) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("handcrafted functions get their verdicts") {
  for (const auto& c : hftest::alphat_cases()) {
    CAPTURE(c.label);
    const Verdict v = at_is_continuous(c.f);
    CHECK(static_cast<bool>(v) == c.continuous);
    if (!v) {
      REQUIRE(v.witness);
      CHECK(*v.witness > 0);
      CHECK(deviates_infinitely(c.f, *v.witness));
    } else {
      // every tail eventually stays within 1/1000 of the limit
      for (const auto& b : c.f.blocks()) {
        if (const auto* t = std::get_if<TailBlock>(&b)) {
          CHECK(rat_abs(Rat(t->value(1'000'000) - c.f.limit())) < q(1, 1000));
        }
      }
    }
    const auto s = at_baire_one_cocountable(c.f);
    CHECK(s == c.cocountable);
    // continuous implies the cocountable test passes
    if (c.continuous) CHECK(s.has_value());
  }
}

TEST_CASE("examples") {
  const AlphaTFunc harmonic(q(0), {TailBlock{"t", q(0), NullSequence::harmonic(q(1))}});
  CHECK(at_is_continuous(harmonic));
  CHECK(harmonic(AlphaTPoint::tail("t", 4)) == q(1, 4));
  CHECK(harmonic(AlphaTPoint::infinity()) == 0);
  CHECK(harmonic(AlphaTPoint::atom("other")) == 0);

  const AlphaTFunc chi(q(0), {UncountableBlock{"T1", q(1)}});
  const Verdict v = at_is_continuous(chi);
  CHECK_FALSE(v);
  CHECK(*v.witness == q(1, 2));
  CHECK_FALSE(at_baire_one_cocountable(chi));

  const AlphaTFunc single(q(0), {FiniteBlock{{"t0"}, q(5)}});
  CHECK(at_baire_one_cocountable(single) == CountableSet{{"t0"}, {}});
  CHECK(at_baire_one_cocountable(harmonic) == CountableSet{{}, {"t"}});
  CHECK(at_is_continuous(AlphaTFunc::constant(q(7))));
}

TEST_CASE("blocks must be disjoint") {
  CHECK_THROWS_AS(AlphaTFunc(q(0), {FiniteBlock{{"a"}, q(1)}, FiniteBlock{{"a"}, q(2)}}), std::invalid_argument);
  CHECK_THROWS_AS(AlphaTFunc(q(0), {UncountableBlock{"T", q(1)}, TailBlock{"T", q(0), NullSequence::zero()}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(AlphaTFunc(q(0), {UncountableBlock{"", q(1)}}), std::invalid_argument);
}

TEST_CASE("stabilizing_set") {
  const std::vector<AlphaTFunc> fam = {AlphaTFunc(q(0), {FiniteBlock{{"t1"}, q(1)}}),
                                       AlphaTFunc(q(0), {FiniteBlock{{"t2"}, q(2)}})};
  CHECK(stabilizing_set(fam) == CountableSet{{"t1", "t2"}, {}});

  std::vector<AlphaTFunc> many;
  for (int i = 0; i < 100; ++i) {
    many.emplace_back(q(0), std::vector<AlphaTBlock>{TailBlock{"s" + std::to_string(i), q(0), NullSequence::harmonic(q(1))}});
  }
  const CountableSet s = stabilizing_set(many);
  CHECK(s.tails.size() == 100);
  CHECK(s.atoms.empty());
  for (const auto& f : many) {
    // f is its limit off s
    for (const auto& b : f.blocks()) {
      const auto& t = std::get<TailBlock>(b);
      CHECK(std::find(s.tails.begin(), s.tails.end(), t.name) != s.tails.end());
    }
  }

  const std::vector<AlphaTFunc> bad = {fam[0], AlphaTFunc(q(0), {UncountableBlock{"T1", q(1)}}), fam[1]};
  try {
    stabilizing_set(bad);
    FAIL("expected StabilizingSetError");
  } catch (const StabilizingSetError& e) {
    CHECK(e.index() == 1);
  }
}

TEST_CASE("diagonal example") {
  const DiagProductFunc f = diag_example();
  const DiagPoint a = DiagPoint::in(1, "a");
  const DiagPoint b = DiagPoint::in(2, "b");
  CHECK(diag_value(f, a, a) == 1);
  CHECK(diag_value(f, b, b) == -1);
  CHECK(diag_value(f, DiagPoint::in(0, "c"), DiagPoint::in(0, "c")) == 0);
  CHECK(diag_value(f, a, DiagPoint::in(1, "a2")) == 0);
  CHECK(diag_value(f, a, DiagPoint::infinity()) == 0);

  CHECK(x_section(f, a) == AlphaTFunc(q(0), {FiniteBlock{{"a"}, q(1)}}));
  CHECK(y_section(f, b) == AlphaTFunc(q(0), {FiniteBlock{{"b"}, q(-1)}}));
  CHECK(x_section(f, DiagPoint::infinity()) == AlphaTFunc::constant(q(0)));

  for (const DiagPoint& p : {DiagPoint::infinity(), DiagPoint::in(0, "u"), a, b}) {
    CHECK(at_is_continuous(x_section(f, p)));
    CHECK(at_is_continuous(y_section(f, p)));
  }

  const ExtremalSections s = at_sections(f);
  CHECK(s.max == AlphaTFunc(q(0), {UncountableBlock{"T1", q(1)}}));
  CHECK(s.min == AlphaTFunc(q(0), {UncountableBlock{"T2", q(-1)}}));
  CHECK_FALSE(at_baire_one_cocountable(s.min));
  CHECK_FALSE(at_baire_one_cocountable(s.max));
  CHECK_FALSE(at_is_continuous(s.max));
}

TEST_CASE("at_sections case analysis") {
  DiagProductFunc zero = diag_example();
  for (auto& b : zero.blocks) b.diagonal = 0;
  const ExtremalSections z = at_sections(zero);
  CHECK(z.min == AlphaTFunc::constant(q(0)));
  CHECK(z.max == AlphaTFunc::constant(q(0)));

  DiagProductFunc no_t1 = diag_example();
  no_t1.blocks[1].cardinality = Cardinality::kEmpty;
  const ExtremalSections e = at_sections(no_t1);
  CHECK(e.max == AlphaTFunc::constant(q(0)));
  CHECK(e.min == AlphaTFunc(q(0), {UncountableBlock{"T2", q(-1)}}));
  CHECK_THROWS_AS(x_section(no_t1, DiagPoint::in(1, "a")), std::invalid_argument);

  // min <= 0 <= max on every block
  DiagProductFunc mixed = diag_example();
  mixed.blocks[0].diagonal = q(3, 2);
  const ExtremalSections m = at_sections(mixed);
  for (const char* tag : {"T0", "T1", "T2"}) {
    CHECK(m.min(AlphaTPoint::in_block(tag)) <= 0);
    CHECK(m.max(AlphaTPoint::in_block(tag)) >= 0);
  }
  CHECK(m.max(AlphaTPoint::in_block("T0")) == q(3, 2));
}
