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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hahnforge {

// Exact rational scalar. Always kept in canonical (reduced, den > 0) form.
using Rat = mpq_class;

// Builds num/den in canonical form. Throws std::invalid_argument on den == 0.
Rat make_rat(long num, long den = 1);

// Parses "num/den" or "num" (optional leading '-'). Throws
// std::invalid_argument on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

// Canonical wire form, always "num/den" (so zero is "0/1").
std::string to_wire(const Rat& r);

// Human form: "num" for integers, "num/den" otherwise.
std::string to_display(const Rat& r);

// Lossy rendering for CSV export, 17 significant digits.
std::string to_decimal17(const Rat& r);

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline const Rat& rat_min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

// floor(r) and ceil(r) as big integers.
mpz_class rat_floor(const Rat& r);
mpz_class rat_ceil(const Rat& r);

}  // namespace hahnforge
