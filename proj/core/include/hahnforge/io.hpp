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

// JSON and CSV exchange formats. Rationals are written as "num/den" strings
// everywhere except in CSV samples, which carry 17-significant-digit floats
// for plotting (lossy) next to the exact values.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hahnforge/alphat.hpp"
#include "hahnforge/builder.hpp"
#include "hahnforge/plalg.hpp"
#include "hahnforge/sections.hpp"

namespace hahnforge {

// Malformed input document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// [["0/1","1/2"], ["1/1","-1/2"]]: [breakpoint, value] pairs.
std::string plfunc_to_json(const PLFunc& f);
PLFunc plfunc_from_json(std::string_view text);

// [["a","b"], ...], closed components; a point has a == b.
std::string ratset_to_json(const RatSet& s);
RatSet ratset_from_json(std::string_view text);

// {"limit": "0/1", "blocks": [{"kind": "finite"|"tail"|"uncountable", ...}]}
std::string alphat_to_json(const AlphaTFunc& f);
AlphaTFunc alphat_from_json(std::string_view text);

// theta, per-block envelopes, alpha, vanishing set and support descriptor,
// and the stage sets F_n.
std::string block_product_to_json(const BlockProductFunc& f);
BlockProductFunc block_product_from_json(std::string_view text);

// Header "x,y,f,f_exact"; y runs over 1..max_y and inf for every grid x.
std::string block_product_samples_csv(const BlockProductFunc& f, std::span<const Rat> grid,
                                      std::uint64_t max_y);

// Sections as PwFunc data plus per-sample witnesses.
std::string section_pair_to_json(const SectionPair& s);
// Header "x,g,h,argmin,argmax,x_exact,g_exact,h_exact".
std::string section_pair_to_csv(const SectionPair& s);

std::string section_report_to_json(const SectionReport& r);

}  // namespace hahnforge
