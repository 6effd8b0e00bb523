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

#include "hahnforge/builder.hpp"

#include <algorithm>
#include <stdexcept>

namespace hahnforge {

namespace {

bool disjoint(const AlphaNSubset& a, const AlphaNSubset& b) {
  if (a.odd_only && b.odd_only) return a.power != b.power;
  if (a.odd_only) return a.power < b.power;
  if (b.odd_only) return b.power < a.power;
  return false;
}

std::uint64_t to_u64(const mpz_class& z) {
  if (z < 0 || !z.fits_ulong_p()) throw std::overflow_error("index does not fit in 64 bits");
  return z.get_ui();
}

// The k >= 1 with 2 * sp(a, 1/k) >= delta, for a in (0,1] and delta in
// (0,1]. They form the integer interval between the roots of
// delta*a^2*k^2 - 4*a*k + delta, whose vertex 2/(delta*a) lies at least
// sqrt(3)/(delta*a) >= 1 away from either root.
std::pair<std::uint64_t, std::uint64_t> bump_positions(const Rat& a, const Rat& delta) {
  auto inside = [&](const mpz_class& k) {
    Rat kk(k);
    return delta * a * a * kk * kk - 4 * a * kk + delta <= 0;
  };
  const Rat vertex = 2 / (delta * a);
  mpz_class lo = 1;
  mpz_class hi = rat_floor(vertex);
  while (lo < hi) {
    mpz_class mid = (lo + hi) / 2;
    if (inside(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const mpz_class first = lo;
  lo = rat_floor(vertex);
  hi = rat_ceil(Rat(4 / (delta * a))) + 1;
  while (hi - lo > 1) {
    mpz_class mid = (lo + hi) / 2;
    if (inside(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {to_u64(first), to_u64(lo)};
}

constexpr std::uint64_t kMaxCertificatePositions = 5'000'000;

}  // namespace

Rat schwartz(const Rat& s, const Rat& t) {
  if (s == 0 && t == 0) return 0;
  return Rat(2 * s * t / (s * s + t * t));
}

Rat phi(const Rat& s, const Rat& t) {
  Rat sp = rat_abs(schwartz(s, t));
  if (sp >= Rat(1, 2)) return 1;
  return Rat(2 * sp);
}

// Bumps ------------------------------------------------------------------------

Rat BumpMap::operator()(AlphaNPoint y) const {
  if (y.is_infinity() || !support.contains(y.index)) return 0;
  const std::uint64_t j = support.index_of(y.index);
  const std::uint64_t k = (j + 1) / 2;
  Rat v(1, static_cast<unsigned long>(k));
  return j % 2 == 1 ? v : Rat(-v);
}

BumpMap oscillating_bump(const AlphaNSet& g) {
  if (const auto* s = std::get_if<AlphaNSubset>(&g)) return BumpMap{*s};
  throw std::invalid_argument("oscillating_bump needs an infinite support");
}

// Blocks -----------------------------------------------------------------------

Rat SchwartzBlock::operator()(const Rat& x, AlphaNPoint y) const {
  const Rat t = beta(y);
  if (t == 0) return 0;
  const Rat p = phi(alpha(x), t);
  if (p == 0) return 0;
  return Rat((t < 0 ? lower(x) : upper(x)) * p);
}

std::optional<std::pair<AlphaNPoint, AlphaNPoint>> SchwartzBlock::witnesses(const Rat& x) const {
  const Rat a = alpha(x);
  if (a == 0) return std::nullopt;
  const std::uint64_t n = to_u64(rat_floor(Rat(1 / a)));
  return std::pair{AlphaNPoint::at(beta.point(2 * n - 1)), AlphaNPoint::at(beta.point(2 * n))};
}

SchwartzBlock hahn_block(const PLFunc& lower, const PLFunc& upper, const RatSet& a,
                         const AlphaNSet& g) {
  const PLFunc zero = PLFunc::constant(Rat(0));
  if (auto v = dominates(lower, zero); !v) {
    throw PreconditionError("lower block envelope is positive somewhere", *v.witness);
  }
  if (auto v = dominates(zero, upper); !v) {
    throw PreconditionError("upper block envelope is negative somewhere", *v.witness);
  }
  return SchwartzBlock{lower, upper, distance_function(a), oscillating_bump(g), a};
}

// BlockProductFunc -------------------------------------------------------------

BlockProductFunc::BlockProductFunc(PLFunc theta, std::vector<SchwartzBlock> blocks,
                                   std::vector<RatSet> stages)
    : theta_(std::move(theta)), blocks_(std::move(blocks)), stages_(std::move(stages)) {
  if (blocks_.empty() || stages_.size() != blocks_.size()) {
    throw std::invalid_argument("need one stage set per block and at least one block");
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks_.size(); ++j) {
      if (!disjoint(blocks_[i].beta.support, blocks_[j].beta.support)) {
        throw std::invalid_argument("block supports overlap");
      }
    }
  }
  for (std::size_t i = 1; i < stages_.size(); ++i) {
    if (stages_[i - 1].intersect(stages_[i]) != stages_[i - 1]) {
      throw std::invalid_argument("stage sets must increase");
    }
  }
  if (stages_.back() != RatSet::full()) throw std::invalid_argument("last stage must be [0,1]");
}

std::optional<std::size_t> BlockProductFunc::block_for(AlphaNPoint y) const {
  if (y.is_infinity()) return std::nullopt;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].beta.support.contains(y.index)) return i;
  }
  return std::nullopt;
}

Rat BlockProductFunc::shifted(const Rat& x, AlphaNPoint y) const {
  auto b = block_for(y);
  if (!b) return 0;
  return blocks_[*b](x, y);
}

Rat BlockProductFunc::operator()(const Rat& x, AlphaNPoint y) const {
  return Rat(theta_(x) + shifted(x, y));
}

std::size_t BlockProductFunc::active_stage(const Rat& x) const {
  for (std::size_t n = 0; n < stages_.size(); ++n) {
    if (stages_[n].contains(x)) return n + 1;
  }
  throw std::logic_error("point outside every stage set");
}

// Synthesis ----------------------------------------------------------------------

StageEnvelopes stage_envelopes(const StableFamily& u) {
  StageEnvelopes se{u.member(1), {}, PLFunc::constant(Rat(0)), PLFunc::constant(Rat(0)), {}, {}, {}};
  for (const auto& m : u.members()) se.shifted.push_back(m - se.theta);
  se.lower_env = pl_min(se.shifted);
  se.upper_env = pl_max(se.shifted);

  PLFunc low = PLFunc::constant(Rat(0));
  PLFunc high = PLFunc::constant(Rat(0));
  RatSet hits_lower;
  RatSet hits_upper;
  for (const auto& m : se.shifted) {
    low = pl_min(low, m);
    high = pl_max(high, m);
    se.lower.push_back(low);
    se.upper.push_back(high);
    hits_lower = hits_lower.unite(equality_set(m, se.lower_env));
    hits_upper = hits_upper.unite(equality_set(m, se.upper_env));
    // union_{j,k<=n} (A_j n B_k) = (union_j A_j) n (union_k B_k)
    se.stages.push_back(hits_lower.intersect(hits_upper));
  }
  return se;
}

BlockProductFunc synthesize(const StableFamily& u) {
  StageEnvelopes se = stage_envelopes(u);
  const OpenFamily supports = disjoint_opens(SpaceKind::kAlphaN, std::nullopt);
  std::vector<SchwartzBlock> blocks;
  blocks.reserve(u.size());
  for (std::size_t n = 1; n <= u.size(); ++n) {
    const RatSet vanishing = n == 1 ? RatSet() : se.stages[n - 2];
    const auto support = std::get<AlphaNSubset>(supports.member(n));
    blocks.push_back(hahn_block(se.lower[n - 1], se.upper[n - 1], vanishing, support));
  }
  return BlockProductFunc(se.theta, std::move(blocks), std::move(se.stages));
}

// Certificates -------------------------------------------------------------------

namespace {

enum class Side { kBoth, kUpper, kLower };

std::vector<std::uint64_t> exception_positions(const BlockProductFunc& f, const Rat& x,
                                               const Rat& eps, Side which) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  std::vector<std::uint64_t> out;
  for (const auto& b : f.blocks()) {
    const Rat a = b.alpha(x);
    if (a == 0) continue;
    // Odd positions y_{2k-1} carry upper(x) * phi(a, 1/k), even ones
    // y_{2k} carry lower(x) * phi(a, 1/k).
    const std::pair<Rat, std::uint64_t> sides[] = {{rat_abs(b.upper(x)), 1}, {rat_abs(b.lower(x)), 0}};
    for (const auto& [scale, odd] : sides) {
      if (scale == 0) continue;
      if (which == Side::kUpper && odd == 0) continue;
      if (which == Side::kLower && odd == 1) continue;
      const Rat delta = eps / scale;
      if (delta > 1) continue;
      auto [k_lo, k_hi] = bump_positions(a, delta);
      if (k_hi - k_lo >= kMaxCertificatePositions) {
        throw std::length_error("exception set too large to enumerate");
      }
      for (std::uint64_t k = k_lo; k <= k_hi; ++k) out.push_back(b.beta.point(2 * k - odd));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::uint64_t> continuity_certificate(const BlockProductFunc& f, const Rat& x,
                                                  const Rat& eps) {
  return exception_positions(f, x, eps, Side::kBoth);
}

SectionExtrema exact_section_extrema(const BlockProductFunc& f, const Rat& x) {
  const Rat base = f.theta()(x);
  Rat worst_lower = 0;
  Rat worst_upper = 0;
  for (const auto& b : f.blocks()) {
    if (b.alpha(x) == 0) continue;
    worst_lower = rat_min(worst_lower, b.lower(x));
    worst_upper = rat_max(worst_upper, b.upper(x));
  }

  // Every y outside E(eps) has |shifted| < eps, so once an enumerated value
  // reaches eps in size it is the global extremum on that side. Upper
  // positions are >= 0 and lower ones <= 0, so each search needs one side.
  auto search = [&](const Rat& start, bool minimise) {
    std::pair<Rat, AlphaNPoint> best{Rat(0), AlphaNPoint::infinity()};
    if (start == 0) return best;
    Rat eps = rat_abs(start);
    for (int round = 0; round < 256; ++round, eps /= 2) {
      best = {Rat(0), AlphaNPoint::infinity()};
      for (std::uint64_t y : exception_positions(f, x, eps, minimise ? Side::kLower : Side::kUpper)) {
        Rat v = f.shifted(x, AlphaNPoint::at(y));
        if (minimise ? v < best.first : v > best.first) best = {v, AlphaNPoint::at(y)};
      }
      if (rat_abs(best.first) >= eps) return best;
    }
    throw std::logic_error("section extremum search did not settle");
  };
  auto [lo, arg_lo] = search(worst_lower, true);
  auto [hi, arg_hi] = search(worst_upper, false);
  return {Rat(base + lo), Rat(base + hi), arg_lo, arg_hi};
}

// Verification -------------------------------------------------------------------

SectionReport verify_synthesis(const BlockProductFunc& f, const StableFamily& u,
                               const std::vector<Rat>& grid) {
  SectionReport report;
  const HahnPair pair = envelopes(u);
  const PLFunc g_shift = pair.g - f.theta();
  const PLFunc h_shift = pair.h - f.theta();
  const PLFunc zero = PLFunc::constant(Rat(0));
  const PLFunc one = PLFunc::constant(Rat(1));

  auto structural = [&](const PLFunc& lo, const PLFunc& hi, std::size_t block, const char* what) {
    if (auto v = dominates(lo, hi); !v) {
      report.failures.push_back({*v.witness, std::nullopt, Rat(0),
                                 "block " + std::to_string(block) + ": " + what});
    }
  };
  for (std::size_t i = 0; i < f.blocks().size(); ++i) {
    const auto& b = f.blocks()[i];
    structural(g_shift, b.lower, i + 1, "lower envelope below g");
    structural(b.lower, zero, i + 1, "lower envelope positive");
    structural(zero, b.upper, i + 1, "upper envelope negative");
    structural(b.upper, h_shift, i + 1, "upper envelope above h");
    structural(zero, b.alpha, i + 1, "alpha negative");
    structural(b.alpha, one, i + 1, "alpha above 1");
  }

  for (const Rat& x : grid) {
    const Rat gx = pair.g(x);
    const Rat hx = pair.h(x);
    SectionRow row{x, gx, hx, f.active_stage(x), AlphaNPoint::infinity(), AlphaNPoint::infinity()};

    auto check_bounds = [&](AlphaNPoint y) {
      const Rat v = f(x, y);
      if (v < gx || v > hx) report.failures.push_back({x, y, v, "value outside [g(x), h(x)]"});
    };
    check_bounds(AlphaNPoint::infinity());
    for (const auto& b : f.blocks()) {
      for (std::uint64_t j = 1; j <= 4; ++j) check_bounds(AlphaNPoint::at(b.beta.point(j)));
      if (auto w = b.witnesses(x)) {
        check_bounds(w->first);
        check_bounds(w->second);
      }
    }

    const SchwartzBlock& active = f.blocks()[row.stage - 1];
    if (auto w = active.witnesses(x)) {
      row.argmax = w->first;
      row.argmin = w->second;
      const Rat vmax = f(x, w->first);
      const Rat vmin = f(x, w->second);
      if (vmax != hx) report.failures.push_back({x, w->first, vmax, "maximum not attained at witness"});
      if (vmin != gx) report.failures.push_back({x, w->second, vmin, "minimum not attained at witness"});
    } else {
      report.failures.push_back({x, std::nullopt, Rat(0), "active block vanishes at x"});
    }

    // Independent of the witnesses: the true extrema of f(x, .).
    const SectionExtrema ext = exact_section_extrema(f, x);
    if (ext.min != gx) report.failures.push_back({x, ext.argmin, ext.min, "section minimum differs from g(x)"});
    if (ext.max != hx) report.failures.push_back({x, ext.argmax, ext.max, "section maximum differs from h(x)"});
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace hahnforge
