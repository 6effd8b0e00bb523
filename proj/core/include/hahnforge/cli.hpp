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

// Command implementations behind the hahnforge executable. They take their
// arguments already parsed and write human output to `out`, problems to
// `err`, and artifacts to disk.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace hahnforge {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitParseError = 2,
  kExitIoError = 3,
};

constexpr std::uint64_t kDefaultGrid = 65;

struct SynthOptions {
  std::string spec_path;
  std::optional<std::uint64_t> grid;  // overrides the spec's grid line
  std::string out_dir = "hahnforge-out";
  std::uint64_t sample_max_y = 64;
};

struct VerifyOptions {
  std::string spec_path;
  std::optional<std::uint64_t> grid;
  std::optional<std::string> report_path;  // JSON report
  bool verbose = false;                    // print every grid row
};

struct SectionsOptions {
  std::string spec_path;
  std::optional<std::uint64_t> grid;
  std::optional<std::string> out_dir;  // sections.json + sections.csv; JSON to `out` otherwise
};

// Writes synth.json (the synthesized function) and samples.csv.
int run_synth(const SynthOptions& opts, std::ostream& out, std::ostream& err);
// Exit 0 exactly when the section report has no failures.
int run_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
// Exact sections of the spec's tail family (needs a limit line).
int run_sections(const SectionsOptions& opts, std::ostream& out, std::ostream& err);
// Prints the scattered rank of [0, ordinal].
int run_rank(const std::string& ordinal, std::ostream& out, std::ostream& err);
// The diagonal example on aT x aT: sections and Baire-one verdicts.
int run_alphat_demo(std::ostream& out, std::ostream& err);

}  // namespace hahnforge
