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

#include <set>

#include "doctest.h"
#include "hahnforge/builder.hpp"
#include "support/gen.hpp"

using namespace hahnforge;

namespace {

Rat q(long n, long d = 1) { return make_rat(n, d); }

StableFamily two_member() { return StableFamily({PLFunc::constant(q(0)), PLFunc::affine(q(1), q(-1, 2))}); }

// Direct formula for the bump sizes, kept apart from schwartz()/phi().
Rat sp_direct(const Rat& s, const Rat& t) { return Rat(2 * s * t / (s * s + t * t)); }

}  // namespace

TEST_CASE("schwartz and phi") {
  CHECK(schwartz(q(0), q(3)) == 0);
  CHECK(schwartz(q(0), q(0)) == 0);
  CHECK(schwartz(q(1), q(1)) == 1);
  CHECK(schwartz(q(1, 4), q(1, 4)) == 1);
  CHECK(schwartz(q(1), q(-1)) == -1);
  CHECK(phi(q(1), q(1, 10)) == q(40, 101));
  CHECK(phi(q(0), q(1, 3)) == 0);
  CHECK(phi(q(0), q(0)) == 0);
  CHECK(phi(q(1, 4), q(1, 4)) == 1);
}

TEST_CASE("phi equals 1 on the key band") {
  for (long n = 1; n <= 50; ++n) {
    const Rat lo = q(1, n + 1), hi = q(1, n), mid = Rat((lo + hi) / 2);
    for (const Rat& a : {lo, mid, hi}) {
      REQUIRE(phi(a, q(1, n)) == 1);
      REQUIRE(phi(a, q(-1, n)) == 1);
      REQUIRE(sp_direct(a, q(1, n)) >= q(n, n + 1));
    }
  }
}

TEST_CASE("phi range and symmetry") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 2000; ++i) {
    const Rat s = hftest::random_rat(rng, -3, 3, 40), t = hftest::random_rat(rng, -3, 3, 40);
    const Rat p = phi(s, t);
    REQUIRE(p >= 0);
    REQUIRE(p <= 1);
    REQUIRE(p == phi(t, s));
    REQUIRE(p == phi(s, Rat(-t)));
  }
}

TEST_CASE("oscillating bump") {
  const BumpMap b = oscillating_bump(AlphaNSubset{1, true});
  CHECK(b.point(1) == 2);
  CHECK(b(AlphaNPoint::at(2)) == 1);
  CHECK(b(AlphaNPoint::at(6)) == -1);
  CHECK(b(AlphaNPoint::at(10)) == q(1, 2));
  CHECK(b(AlphaNPoint::at(14)) == q(-1, 2));
  CHECK(b(AlphaNPoint::at(4)) == 0);
  CHECK(b(AlphaNPoint::at(3)) == 0);
  CHECK(b(AlphaNPoint::infinity()) == 0);
  Rat sup = 0;
  for (std::uint64_t y = 1; y <= 1000; ++y) sup = rat_max(sup, rat_abs(b(AlphaNPoint::at(y))));
  CHECK(sup == 1);
  // values tend to 0 along the enumeration
  CHECK(rat_abs(b(AlphaNPoint::at(b.point(2001)))) == q(1, 1001));
  CHECK_THROWS_AS(oscillating_bump(FiniteIndexSet{{1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("two-member stage-2 block") {
  const PLFunc x_half = PLFunc::affine(q(1), q(-1, 2));
  const PLFunc zero = PLFunc::constant(q(0));
  const SchwartzBlock blk =
      hahn_block(pl_min(zero, x_half), pl_max(zero, x_half), RatSet::point(q(1, 2)), AlphaNSubset{1, true});
  for (std::uint64_t y = 1; y <= 200; ++y) CHECK(blk(q(1, 2), AlphaNPoint::at(y)) == 0);
  CHECK(blk(q(3, 10), AlphaNPoint::at(5)) == 0);

  Rat best = 1;
  std::uint64_t arg = 0;
  for (std::uint64_t y = 1; y <= 10000; ++y) {
    const Rat v = blk(q(1, 4), AlphaNPoint::at(y));
    if (v < best) {
      best = v;
      arg = y;
    }
  }
  CHECK(best == q(-1, 4));
  CHECK(arg == 14);  // first of several attaining points
  CHECK(blk(q(1, 4), AlphaNPoint::at(30)) == q(-1, 4));
  const auto w = blk.witnesses(q(1, 4));
  REQUIRE(w);
  CHECK(w->second == AlphaNPoint::at(30));
  CHECK(w->first == AlphaNPoint::at(26));
  CHECK_FALSE(blk.witnesses(q(1, 2)));
}

TEST_CASE("hahn_block preconditions") {
  const PLFunc zero = PLFunc::constant(q(0));
  try {
    hahn_block(PLFunc::affine(q(1), q(-1, 2)), zero, RatSet(), AlphaNSubset{0, true});
    FAIL("positive lower envelope accepted");
  } catch (const PreconditionError& e) {
    CHECK(e.witness() > q(1, 2));
  }
  CHECK_THROWS_AS(hahn_block(zero, PLFunc::constant(q(-1)), RatSet(), AlphaNSubset{0, true}), PreconditionError);
}

TEST_CASE("random blocks vanish where they should and attain at witnesses") {
  std::mt19937_64 rng(42);
  const auto grid = hftest::dyadic_grid();
  for (int trial = 0; trial < 30; ++trial) {
    const PLFunc lower = pl_min(hftest::random_pl(rng), PLFunc::constant(q(0)));
    const PLFunc upper = pl_max(hftest::random_pl(rng), PLFunc::constant(q(0)));
    RatSet a;
    if (hftest::uniform(rng, 0, 3) > 0) {
      const Rat u = hftest::random_rat(rng, 0, 1, 8), v = hftest::random_rat(rng, 0, 1, 8);
      a = RatSet::interval(rat_min(u, v), rat_max(u, v));
    }
    const AlphaNSubset g{static_cast<unsigned>(hftest::uniform(rng, 0, 4)), true};
    const SchwartzBlock blk = hahn_block(lower, upper, a, g);
    for (const Rat& x : grid) {
      for (std::uint64_t y = 1; y <= 200; ++y) {
        const Rat v = blk(x, AlphaNPoint::at(y));
        if (a.contains(x) || !g.contains(y)) REQUIRE(v == 0);
        REQUIRE(v >= lower(x));
        REQUIRE(v <= upper(x));
      }
      if (!a.contains(x)) {
        const auto w = blk.witnesses(x);
        REQUIRE(w);
        REQUIRE(blk(x, w->first) == upper(x));
        REQUIRE(blk(x, w->second) == lower(x));
      }
    }
  }
}

TEST_CASE("BlockProductFunc validation") {
  const PLFunc zero = PLFunc::constant(q(0));
  const SchwartzBlock b1 = hahn_block(zero, zero, RatSet(), AlphaNSubset{0, true});
  const SchwartzBlock b2 = hahn_block(zero, zero, RatSet(), AlphaNSubset{1, true});
  const SchwartzBlock all = hahn_block(zero, zero, RatSet(), AlphaNSubset{0, false});
  CHECK_NOTHROW(BlockProductFunc(zero, {b1, b2}, {RatSet(), RatSet::full()}));
  CHECK_THROWS_AS(BlockProductFunc(zero, {b1, all}, {RatSet(), RatSet::full()}), std::invalid_argument);
  CHECK_THROWS_AS(BlockProductFunc(zero, {b1, b2}, {RatSet::full(), RatSet::point(q(0))}), std::invalid_argument);
  CHECK_THROWS_AS(BlockProductFunc(zero, {b1, b2}, {RatSet(), RatSet::point(q(0))}), std::invalid_argument);
  CHECK_THROWS_AS(BlockProductFunc(zero, {b1}, {RatSet(), RatSet::full()}), std::invalid_argument);
}

TEST_CASE("synthesize the two-member family") {
  const BlockProductFunc f = synthesize(two_member());
  REQUIRE(f.stages().size() == 2);
  CHECK(f.stages()[0] == RatSet::point(q(1, 2)));
  CHECK(f.stages()[1] == RatSet::full());
  CHECK(f.blocks()[0].lower == PLFunc::constant(q(0)));
  CHECK(f.blocks()[0].upper == PLFunc::constant(q(0)));
  CHECK(f.blocks()[0].alpha == PLFunc::constant(q(1)));
  CHECK(f.blocks()[1].beta.support == AlphaNSubset{1, true});
  CHECK(f.theta() == PLFunc::constant(q(0)));

  Rat lo = 0, hi = 0;
  std::uint64_t argmin = 0;
  for (std::uint64_t y = 1; y <= 10000; ++y) {
    const Rat v = f(q(1, 4), AlphaNPoint::at(y));
    if (v < lo) {
      lo = v;
      argmin = y;
    }
    hi = rat_max(hi, v);
  }
  CHECK(lo == q(-1, 4));
  CHECK(argmin == 14);
  CHECK(f(q(1, 4), AlphaNPoint::at(30)) == q(-1, 4));
  CHECK(hi == 0);
  CHECK(f(q(1, 4), AlphaNPoint::infinity()) == 0);

  const SectionExtrema e = exact_section_extrema(f, q(1, 4));
  CHECK(e.min == q(-1, 4));
  CHECK(f(q(1, 4), e.argmin) == q(-1, 4));
  CHECK(e.max == 0);
  CHECK(e.argmax == AlphaNPoint::infinity());
  CHECK(f.active_stage(q(1, 2)) == 1);
  CHECK(f.active_stage(q(1, 4)) == 2);
}

TEST_CASE("continuity certificates for the two-member family") {
  const BlockProductFunc f = synthesize(two_member());
  CHECK(continuity_certificate(f, q(1, 2), q(1)).empty());
  CHECK(continuity_certificate(f, q(1, 2), q(1, 64)).empty());
  CHECK(continuity_certificate(f, q(1, 4), q(1)).empty());

  const auto e = continuity_certificate(f, q(1, 4), q(1, 8));
  CHECK(e.size() == 31);
  // the points y_{2i}, i = 1..31, of {2, 6, 10, ...}
  for (std::size_t i = 1; i <= 31; ++i) CHECK(e[i - 1] == 2 * (4 * i - 1));

  // independent count: i with |g(1/4)| * phi(1/4, 1/i) >= 1/8, i.e. sp >= 1/4
  std::size_t count = 0;
  for (long i = 1; i <= 1000; ++i) count += sp_direct(q(1, 4), q(1, i)) >= q(1, 4) ? 1 : 0;
  CHECK(count == 31);

  for (const Rat& x : {q(1, 4), q(1, 2), q(3, 4)}) {
    for (const Rat& eps : {q(1), q(1, 8), q(1, 64)}) {
      const auto cert = continuity_certificate(f, x, eps);
      const std::set<std::uint64_t> in(cert.begin(), cert.end());
      for (std::uint64_t y = 1; y <= 10000; ++y) {
        const bool big = rat_abs(f.shifted(x, AlphaNPoint::at(y))) >= eps;
        REQUIRE(big == (in.count(y) == 1));
      }
    }
  }
  CHECK_THROWS_AS(continuity_certificate(f, q(1, 4), q(0)), std::invalid_argument);
}

TEST_CASE("certificates are exact on random syntheses") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const BlockProductFunc f = synthesize(hftest::random_family(rng, 4));
    for (const Rat& x : hftest::dyadic_grid(2)) {
      const Rat eps = q(1, hftest::uniform(rng, 2, 16));
      const auto cert = continuity_certificate(f, x, eps);
      const std::set<std::uint64_t> in(cert.begin(), cert.end());
      for (std::uint64_t y = 1; y <= 4000; ++y) {
        const bool big = rat_abs(f.shifted(x, AlphaNPoint::at(y))) >= eps;
        REQUIRE(big == (in.count(y) == 1));
      }
    }
  }
}

TEST_CASE("stage envelopes bracket the members and stages are nested") {
  std::mt19937_64 rng(44);
  const auto grid = hftest::dyadic_grid();
  for (int trial = 0; trial < 100; ++trial) {
    const StableFamily u = hftest::random_family(rng);
    const StageEnvelopes se = stage_envelopes(u);
    const PLFunc zero = PLFunc::constant(q(0));
    REQUIRE(se.stages.back() == RatSet::full());
    for (std::size_t n = 0; n < u.size(); ++n) {
      CHECK(dominates(se.lower_env, se.lower[n]));
      CHECK(dominates(se.lower[n], zero));
      CHECK(dominates(zero, se.upper[n]));
      CHECK(dominates(se.upper[n], se.upper_env));
      if (n > 0) CHECK(se.stages[n - 1].intersect(se.stages[n]) == se.stages[n - 1]);
      for (const Rat& x : grid) {
        if (!se.stages[n].contains(x)) continue;
        REQUIRE(se.lower[n](x) == se.lower_env(x));
        REQUIRE(se.upper[n](x) == se.upper_env(x));
      }
      // stage containment on the whole set, not only the grid
      for (const auto& c : se.stages[n].components()) {
        for (const Rat& x : {c.lo, c.hi, Rat((c.lo + c.hi) / 2)}) {
          REQUIRE(se.lower[n](x) == se.lower_env(x));
          REQUIRE(se.upper[n](x) == se.upper_env(x));
        }
      }
    }
  }
}

TEST_CASE("round trip on random families") {
  std::mt19937_64 rng(45);
  const auto grid = hftest::dyadic_grid();
  for (int trial = 0; trial < 30; ++trial) {
    const StableFamily u = hftest::random_family(rng);
    const BlockProductFunc f = synthesize(u);
    const SectionReport r = verify_synthesis(f, u, grid);
    CHECK(r.passed());
    REQUIRE(r.rows.size() == grid.size());
    const HahnPair p = envelopes(u);
    for (const auto& row : r.rows) {
      REQUIRE(f(row.x, row.argmin) == p.g(row.x));
      REQUIRE(f(row.x, row.argmax) == p.h(row.x));
    }
    // brute-force scan never leaves [g, h] and never beats the envelopes
    for (const Rat& x : hftest::dyadic_grid(3)) {
      for (std::uint64_t y = 1; y <= 512; ++y) {
        const Rat v = f(x, AlphaNPoint::at(y));
        REQUIRE(v >= p.g(x));
        REQUIRE(v <= p.h(x));
      }
    }
    // disjoint supports: at most one block is nonzero at any y
    for (std::uint64_t y = 1; y <= 2048; ++y) {
      int owners = 0;
      for (const auto& b : f.blocks()) owners += b.beta.support.contains(y) ? 1 : 0;
      REQUIRE(owners <= 1);
    }
  }
}

TEST_CASE("verify_synthesis") {
  const auto grid = uniform_grid(65);
  const BlockProductFunc f = synthesize(two_member());
  const SectionReport ok = verify_synthesis(f, two_member(), grid);
  CHECK(ok.passed());
  CHECK(ok.rows.size() == 65);
  CHECK(ok.rows[16].argmin == AlphaNPoint::at(30));

  // tampering: lower block envelope shifted down by 1
  std::vector<SchwartzBlock> blocks = f.blocks();
  blocks[1].lower = blocks[1].lower - PLFunc::constant(q(1));
  const BlockProductFunc bad(f.theta(), blocks, f.stages());
  const SectionReport r = verify_synthesis(bad, two_member(), grid);
  CHECK_FALSE(r.passed());
  bool structural = false;
  for (const auto& fl : r.failures) structural = structural || fl.message.find("below g") != std::string::npos;
  CHECK(structural);

  const PLFunc g({q(0), q(1, 3), q(1)}, {q(1), q(-1), q(1, 2)});
  const StableFamily single({g});
  const BlockProductFunc fs = synthesize(single);
  const SectionReport rs = verify_synthesis(fs, single, grid);
  CHECK(rs.passed());
  for (const auto& row : rs.rows) {
    CHECK(row.g == g(row.x));
    CHECK(row.h == g(row.x));
    for (std::uint64_t y = 1; y <= 50; ++y) CHECK(fs(row.x, AlphaNPoint::at(y)) == g(row.x));
  }
}
