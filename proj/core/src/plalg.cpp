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

#include "hahnforge/plalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hahnforge {

namespace {

Rat interpolate(const Rat& x0, const Rat& y0, const Rat& x1, const Rat& y1, const Rat& x) {
  if (x == x0) return y0;
  if (x == x1) return y1;
  return Rat(y0 + (y1 - y0) * (x - x0) / (x1 - x0));
}

void check_unit(const Rat& x) {
  if (x < 0 || x > 1) throw std::domain_error("point " + to_display(x) + " outside [0,1]");
}

void check_partition(const std::vector<Rat>& xs) {
  if (xs.size() < 2) throw std::invalid_argument("partition needs at least the points 0 and 1");
  if (xs.front() != 0 || xs.back() != 1) {
    throw std::invalid_argument("partition must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i - 1] < xs[i])) throw std::invalid_argument("partition must strictly increase");
  }
}

// Values of f on a sorted grid contained in [0,1], by a single sweep.
std::vector<Rat> sample_sorted(const PLFunc& f, const std::vector<Rat>& grid) {
  const auto& xs = f.breakpoints();
  const auto& ys = f.values();
  std::vector<Rat> out;
  out.reserve(grid.size());
  std::size_t seg = 0;
  for (const Rat& x : grid) {
    while (seg + 2 < xs.size() && xs[seg + 1] < x) ++seg;
    out.push_back(interpolate(xs[seg], ys[seg], xs[seg + 1], ys[seg + 1], x));
  }
  return out;
}

enum class Pick { kMin, kMax, kSum };

PLFunc combine2(const PLFunc& a, const PLFunc& b, Pick pick) {
  std::vector<Rat> grid = merged_grid(a, b);
  std::vector<Rat> va = sample_sorted(a, grid);
  std::vector<Rat> vb = sample_sorted(b, grid);

  std::vector<Rat> xs;
  std::vector<Rat> ys;
  xs.reserve(grid.size() * 2);
  ys.reserve(grid.size() * 2);
  auto emit = [&](const Rat& x, const Rat& p, const Rat& q) {
    xs.push_back(x);
    switch (pick) {
      case Pick::kMin: ys.push_back(rat_min(p, q)); break;
      case Pick::kMax: ys.push_back(rat_max(p, q)); break;
      case Pick::kSum: ys.push_back(p + q); break;
    }
  };
  for (std::size_t i = 0; i < grid.size(); ++i) {
    emit(grid[i], va[i], vb[i]);
    if (pick == Pick::kSum || i + 1 == grid.size()) continue;
    Rat d0 = va[i] - vb[i];
    Rat d1 = va[i + 1] - vb[i + 1];
    if ((d0 < 0 && d1 > 0) || (d0 > 0 && d1 < 0)) {
      Rat t = d0 / (d0 - d1);
      Rat xc = grid[i] + t * (grid[i + 1] - grid[i]);
      Rat yc = va[i] + t * (va[i + 1] - va[i]);
      xs.push_back(xc);
      ys.push_back(yc);
    }
  }
  return PLFunc(std::move(xs), std::move(ys));
}

PLFunc map_values(const PLFunc& f, const Rat& factor) {
  std::vector<Rat> ys;
  ys.reserve(f.size());
  for (const Rat& y : f.values()) ys.push_back(factor * y);
  return PLFunc(f.breakpoints(), std::move(ys));
}

PLFunc fold(std::span<const PLFunc> fs, Pick pick) {
  if (fs.empty()) throw std::invalid_argument("lattice operation needs at least one argument");
  PLFunc acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = combine2(acc, fs[i], pick);
  return acc;
}

Rat distance_to(const RatSet& s, const Rat& x) {
  Rat best = -1;
  for (const auto& c : s.components()) {
    Rat d = x < c.lo ? Rat(c.lo - x) : x > c.hi ? Rat(x - c.hi) : Rat(0);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

}  // namespace

// PLFunc ---------------------------------------------------------------------

PLFunc::PLFunc(std::vector<Rat> breakpoints, std::vector<Rat> values) {
  check_partition(breakpoints);
  if (breakpoints.size() != values.size()) {
    throw std::invalid_argument("breakpoint/value length mismatch");
  }
  const std::size_t n = breakpoints.size();
  xs_.reserve(n);
  ys_.reserve(n);
  xs_.push_back(breakpoints[0]);
  ys_.push_back(values[0]);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const Rat& px = xs_.back();
    const Rat& py = ys_.back();
    bool collinear = (values[i] - py) * (breakpoints[i + 1] - breakpoints[i]) ==
                     (values[i + 1] - values[i]) * (breakpoints[i] - px);
    if (collinear) continue;
    xs_.push_back(std::move(breakpoints[i]));
    ys_.push_back(std::move(values[i]));
  }
  xs_.push_back(std::move(breakpoints[n - 1]));
  ys_.push_back(std::move(values[n - 1]));
}

PLFunc PLFunc::constant(const Rat& c) { return PLFunc({Rat(0), Rat(1)}, {c, c}); }

PLFunc PLFunc::identity() { return PLFunc({Rat(0), Rat(1)}, {Rat(0), Rat(1)}); }

PLFunc PLFunc::affine(const Rat& slope, const Rat& intercept) {
  return PLFunc({Rat(0), Rat(1)}, {intercept, Rat(slope + intercept)});
}

Rat PLFunc::operator()(const Rat& x) const {
  check_unit(x);
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t hi = static_cast<std::size_t>(it - xs_.begin());
  if (hi == xs_.size()) return ys_.back();
  std::size_t lo = hi - 1;
  return interpolate(xs_[lo], ys_[lo], xs_[hi], ys_[hi], x);
}

Rat PLFunc::slope(std::size_t i) const {
  return (ys_.at(i + 1) - ys_.at(i)) / (xs_.at(i + 1) - xs_.at(i));
}

Rat PLFunc::sup_abs() const {
  Rat m = 0;
  for (const Rat& y : ys_) m = rat_max(m, rat_abs(y));
  return m;
}

Rat eval(const PLFunc& f, const Rat& x) { return f(x); }

std::vector<Rat> uniform_grid(std::size_t points) {
  if (points < 2) throw std::invalid_argument("a grid needs at least two points");
  std::vector<Rat> grid;
  grid.reserve(points);
  const Rat step(1, static_cast<unsigned long>(points - 1));
  for (std::size_t k = 0; k < points; ++k) grid.push_back(Rat(step * static_cast<unsigned long>(k)));
  grid.back() = 1;
  return grid;
}

std::vector<Rat> merged_grid(const PLFunc& a, const PLFunc& b) {
  std::vector<Rat> grid;
  grid.reserve(a.size() + b.size());
  std::set_union(a.breakpoints().begin(), a.breakpoints().end(), b.breakpoints().begin(),
                 b.breakpoints().end(), std::back_inserter(grid));
  return grid;
}

PLFunc lattice_combine(LatticeOp op, std::span<const PLFunc> args, const Rat& scale) {
  switch (op) {
    case LatticeOp::kMin: return fold(args, Pick::kMin);
    case LatticeOp::kMax: return fold(args, Pick::kMax);
    case LatticeOp::kSum: return fold(args, Pick::kSum);
    case LatticeOp::kScale:
    case LatticeOp::kAbs:
    case LatticeOp::kNegate: break;
  }
  if (args.size() != 1) throw std::invalid_argument("unary lattice operation needs one argument");
  const PLFunc& f = args.front();
  if (op == LatticeOp::kScale) return map_values(f, scale);
  if (op == LatticeOp::kNegate) return map_values(f, Rat(-1));
  return combine2(f, map_values(f, Rat(-1)), Pick::kMax);
}

PLFunc pl_min(const PLFunc& a, const PLFunc& b) { return combine2(a, b, Pick::kMin); }
PLFunc pl_max(const PLFunc& a, const PLFunc& b) { return combine2(a, b, Pick::kMax); }
PLFunc pl_min(std::span<const PLFunc> fs) { return fold(fs, Pick::kMin); }
PLFunc pl_max(std::span<const PLFunc> fs) { return fold(fs, Pick::kMax); }
PLFunc pl_abs(const PLFunc& f) { return lattice_combine(LatticeOp::kAbs, std::span(&f, 1)); }
PLFunc operator+(const PLFunc& a, const PLFunc& b) { return combine2(a, b, Pick::kSum); }
PLFunc operator-(const PLFunc& f) { return map_values(f, Rat(-1)); }
PLFunc operator-(const PLFunc& a, const PLFunc& b) { return a + (-b); }
PLFunc operator*(const Rat& c, const PLFunc& f) { return map_values(f, c); }

// RatSet ---------------------------------------------------------------------

RatSet::RatSet(std::vector<RatInterval> components) {
  for (const auto& c : components) {
    if (c.lo > c.hi) throw std::invalid_argument("interval with lo > hi");
    if (c.lo < 0 || c.hi > 1) throw std::invalid_argument("interval outside [0,1]");
  }
  std::sort(components.begin(), components.end(),
            [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });
  for (auto& c : components) {
    if (!parts_.empty() && c.lo <= parts_.back().hi) {
      if (c.hi > parts_.back().hi) parts_.back().hi = c.hi;
    } else {
      parts_.push_back(std::move(c));
    }
  }
}

RatSet RatSet::full() { return RatSet({{Rat(0), Rat(1)}}); }
RatSet RatSet::point(const Rat& x) { return RatSet({{x, x}}); }
RatSet RatSet::interval(const Rat& lo, const Rat& hi) { return RatSet({{lo, hi}}); }

bool RatSet::contains(const Rat& x) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                             [](const Rat& v, const RatInterval& c) { return v < c.lo; });
  if (it == parts_.begin()) return false;
  --it;
  return x <= it->hi;
}

RatSet RatSet::unite(const RatSet& other) const {
  std::vector<RatInterval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return RatSet(std::move(all));
}

RatSet RatSet::intersect(const RatSet& other) const {
  std::vector<RatInterval> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < parts_.size() && j < other.parts_.size()) {
    const auto& a = parts_[i];
    const auto& b = other.parts_[j];
    const Rat& lo = rat_max(a.lo, b.lo);
    const Rat& hi = rat_min(a.hi, b.hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (a.hi < b.hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return RatSet(std::move(out));
}

// Set-valued operations ------------------------------------------------------

RatSet equality_set(const PLFunc& f, const PLFunc& g) {
  std::vector<Rat> grid = merged_grid(f, g);
  std::vector<Rat> vf = sample_sorted(f, grid);
  std::vector<Rat> vg = sample_sorted(g, grid);
  std::vector<RatInterval> parts;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    Rat d0 = vf[i] - vg[i];
    if (d0 == 0) parts.push_back({grid[i], grid[i]});
    if (i + 1 == grid.size()) continue;
    Rat d1 = vf[i + 1] - vg[i + 1];
    if (d0 == 0 && d1 == 0) {
      parts.push_back({grid[i], grid[i + 1]});
    } else if ((d0 < 0 && d1 > 0) || (d0 > 0 && d1 < 0)) {
      Rat xc = grid[i] + d0 / (d0 - d1) * (grid[i + 1] - grid[i]);
      parts.push_back({xc, xc});
    }
  }
  return RatSet(std::move(parts));
}

PLFunc distance_function(const RatSet& s) {
  if (s.empty()) return PLFunc::constant(Rat(1));
  std::vector<Rat> pts{Rat(0), Rat(1)};
  const auto& cs = s.components();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    pts.push_back(cs[i].lo);
    pts.push_back(cs[i].hi);
    if (i + 1 < cs.size()) pts.push_back((cs[i].hi + cs[i + 1].lo) / 2);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Rat> ds;
  ds.reserve(pts.size());
  for (const Rat& p : pts) ds.push_back(distance_to(s, p));
  return pl_min(PLFunc(std::move(pts), std::move(ds)), PLFunc::constant(Rat(1)));
}

Verdict dominates(const PLFunc& f, const PLFunc& g) {
  std::vector<Rat> grid = merged_grid(f, g);
  std::vector<Rat> vf = sample_sorted(f, grid);
  std::vector<Rat> vg = sample_sorted(g, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (vf[i] > vg[i]) return Verdict::no(grid[i]);
  }
  return Verdict::yes();
}

// PwFunc ---------------------------------------------------------------------

PwFunc::PwFunc(std::vector<Rat> partition, std::vector<Piece> pieces, std::vector<Rat> point_values)
    : xs_(std::move(partition)), pieces_(std::move(pieces)), points_(std::move(point_values)) {
  check_partition(xs_);
  if (pieces_.size() + 1 != xs_.size() || points_.size() != xs_.size()) {
    throw std::invalid_argument("PwFunc piece/point count mismatch");
  }
}

PwFunc PwFunc::from_pl(const PLFunc& f) {
  const auto& ys = f.values();
  std::vector<Piece> pieces;
  pieces.reserve(ys.size() - 1);
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) pieces.push_back({ys[i], ys[i + 1]});
  return PwFunc(f.breakpoints(), std::move(pieces), ys);
}

PwFunc PwFunc::indicator(const Rat& lo, const Rat& hi) {
  if (lo > hi || lo < 0 || hi > 1) throw std::invalid_argument("indicator interval outside [0,1]");
  std::vector<Rat> xs{Rat(0), lo, hi, Rat(1)};
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Piece> pieces;
  std::vector<Rat> points;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    points.push_back(lo <= xs[i] && xs[i] <= hi ? Rat(1) : Rat(0));
    if (i + 1 == xs.size()) continue;
    Rat mid = (xs[i] + xs[i + 1]) / 2;
    Rat v = lo < mid && mid < hi ? Rat(1) : Rat(0);
    pieces.push_back({v, v});
  }
  return PwFunc(std::move(xs), std::move(pieces), std::move(points));
}

Rat PwFunc::operator()(const Rat& x) const {
  check_unit(x);
  auto it = std::lower_bound(xs_.begin(), xs_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - xs_.begin());
  if (*it == x) return points_[i];
  const Piece& p = pieces_[i - 1];
  return interpolate(xs_[i - 1], p.right_of_start, xs_[i], p.left_of_end, x);
}

PwFunc PwFunc::negated() const {
  std::vector<Piece> pieces;
  pieces.reserve(pieces_.size());
  for (const auto& p : pieces_) pieces.push_back({-p.right_of_start, -p.left_of_end});
  std::vector<Rat> points;
  points.reserve(points_.size());
  for (const auto& v : points_) points.push_back(-v);
  return PwFunc(xs_, std::move(pieces), std::move(points));
}

Verdict semicontinuity_check(const PwFunc& f, Semicontinuity kind) {
  const auto& xs = f.partition();
  const auto& pieces = f.pieces();
  const auto& pts = f.point_values();
  auto violates = [&](const Rat& point, const Rat& limit) {
    return kind == Semicontinuity::kUpper ? point < limit : point > limit;
  };
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0 && violates(pts[i], pieces[i - 1].left_of_end)) return Verdict::no(xs[i]);
    if (i + 1 < xs.size() && violates(pts[i], pieces[i].right_of_start)) return Verdict::no(xs[i]);
  }
  return Verdict::yes();
}

}  // namespace hahnforge
