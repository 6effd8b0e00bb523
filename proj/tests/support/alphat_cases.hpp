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

// Handcrafted functions on aT with their expected verdicts.

#include <optional>
#include <string>
#include <vector>

#include "hahnforge/alphat.hpp"

namespace hftest {

struct AlphaTCase {
  std::string label;
  hahnforge::AlphaTFunc f;
  bool continuous;
  // The countable set off which f is constant, or nullopt for "not Baire one".
  std::optional<hahnforge::CountableSet> cocountable;
};

inline std::vector<AlphaTCase> alphat_cases() {
  using namespace hahnforge;
  const Rat zero(0);
  auto q = [](long n, long d = 1) { return make_rat(n, d); };
  auto fin = [](std::vector<std::string> atoms, Rat v) { return AlphaTBlock(FiniteBlock{std::move(atoms), v}); };
  auto tail = [](std::string name, Rat base, NullSequence dev) { return AlphaTBlock(TailBlock{std::move(name), base, dev}); };
  auto unc = [](std::string tag, Rat v) { return AlphaTBlock(UncountableBlock{std::move(tag), v}); };
  auto S = [](std::vector<std::string> atoms, std::vector<std::string> tails) {
    return std::optional<CountableSet>(CountableSet{std::move(atoms), std::move(tails)});
  };
  const auto none = std::optional<CountableSet>();

  std::vector<std::string> hundred;
  for (int i = 0; i < 100; ++i) hundred.push_back("a" + std::to_string(1000 + i));

  return {
      {"zero", AlphaTFunc::constant(zero), true, S({}, {})},
      {"constant 3/2", AlphaTFunc::constant(q(3, 2)), true, S({}, {})},
      {"single atom", AlphaTFunc(zero, {fin({"t0"}, q(5))}), true, S({"t0"}, {})},
      {"harmonic tail", AlphaTFunc(zero, {tail("t", zero, NullSequence::harmonic(q(1)))}), true, S({}, {"t"})},
      {"chi T1", AlphaTFunc(zero, {unc("T1", q(1))}), false, none},
      {"-chi T2", AlphaTFunc(zero, {unc("T2", q(-1))}), false, none},
      {"tail to wrong limit", AlphaTFunc(zero, {tail("t", q(1), NullSequence::harmonic(q(1)))}), false, S({}, {"t"})},
      {"uncountable at limit", AlphaTFunc(q(2), {unc("U", q(2))}), true, S({}, {})},
      {"geometric tail", AlphaTFunc(zero, {tail("t", zero, NullSequence::geometric(q(3), q(1, 2)))}), true, S({}, {"t"})},
      {"zero-rule tail off limit", AlphaTFunc(q(1), {tail("t", zero, NullSequence::zero())}), false, S({}, {"t"})},
      {"atoms and tail", AlphaTFunc(zero, {fin({"c", "a", "b"}, q(-7)), tail("t", zero, NullSequence::harmonic(q(2)))}), true, S({"a", "b", "c"}, {"t"})},
      {"atom at limit value", AlphaTFunc(q(1), {fin({"a"}, q(1))}), true, S({"a"}, {})},
      {"atoms and bad block", AlphaTFunc(zero, {fin({"a"}, q(1)), unc("U", q(1, 3))}), false, none},
      {"good and bad tails", AlphaTFunc(zero, {tail("s", zero, NullSequence::harmonic(q(1))), tail("t", q(1, 4), NullSequence::zero())}), false, S({}, {"s", "t"})},
      {"shifted harmonic", AlphaTFunc(q(-1, 3), {tail("t", q(-1, 3), NullSequence::harmonic(q(-2)))}), true, S({}, {"t"})},
      {"good block, bad tail", AlphaTFunc(zero, {unc("U", zero), tail("t", q(2), NullSequence::harmonic(q(1)))}), false, S({}, {"t"})},
      {"limit 5, block 4", AlphaTFunc(q(5), {unc("U", q(4))}), false, none},
      {"null harmonic", AlphaTFunc(zero, {tail("t", zero, NullSequence::harmonic(zero))}), true, S({}, {"t"})},
      {"hundred atoms", AlphaTFunc(zero, {fin(hundred, q(9))}), true, S(hundred, {})},
      {"two bad blocks", AlphaTFunc(zero, {unc("T1", q(1)), unc("T2", q(-1))}), false, none},
      {"two good tails and atoms", AlphaTFunc(q(1), {tail("s", q(1), NullSequence::geometric(q(-1), q(2, 3))), tail("r", q(1), NullSequence::harmonic(q(1, 2))), fin({"z"}, q(0))}), true, S({"z"}, {"r", "s"})},
  };
}

}  // namespace hftest
