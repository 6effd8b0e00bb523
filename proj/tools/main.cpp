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

#include <iostream>

#include "CLI11.hpp"
#include "hahnforge/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Separately continuous functions with prescribed extremal sections"};
  app.require_subcommand(1);

  hahnforge::SynthOptions synth;
  auto* synth_cmd = app.add_subcommand("synth", "Synthesize f from a stable family and export it");
  synth_cmd->add_option("spec", synth.spec_path, "Spec file")->required();
  synth_cmd->add_option("--grid", synth.grid, "Grid points for samples")->check(CLI::Range(2, 1000000));
  synth_cmd->add_option("--out", synth.out_dir, "Output directory")->capture_default_str();
  synth_cmd->add_option("--max-y", synth.sample_max_y, "Sample y = 1..N plus inf")->capture_default_str();

  hahnforge::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Synthesize and check the sections on a grid");
  verify_cmd->add_option("spec", verify.spec_path, "Spec file")->required();
  verify_cmd->add_option("--grid", verify.grid, "Grid points")->check(CLI::Range(2, 1000000));
  verify_cmd->add_option("--report", verify.report_path, "Write the JSON report here");
  verify_cmd->add_flag("-v,--verbose", verify.verbose, "Print every grid row");

  hahnforge::SectionsOptions sections;
  auto* sections_cmd = app.add_subcommand("sections", "Exact sections of a tail family");
  sections_cmd->add_option("spec", sections.spec_path, "Spec file")->required();
  sections_cmd->add_option("--grid", sections.grid, "Grid points")->check(CLI::Range(2, 1000000));
  sections_cmd->add_option("--out", sections.out_dir, "Write sections.json and sections.csv here");

  std::string ordinal;
  auto* rank_cmd = app.add_subcommand("rank", "Scattered rank of [0, ordinal]");
  rank_cmd->add_option("ordinal", ordinal, "Ordinal below w^w, e.g. \"w^2*3 + 4\"")->required();

  auto* demo_cmd = app.add_subcommand("alphat-demo", "Diagonal example on aT x aT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? hahnforge::kExitOk : hahnforge::kExitParseError;
  }

  if (*synth_cmd) return hahnforge::run_synth(synth, std::cout, std::cerr);
  if (*verify_cmd) return hahnforge::run_verify(verify, std::cout, std::cerr);
  if (*sections_cmd) return hahnforge::run_sections(sections, std::cout, std::cerr);
  if (*rank_cmd) return hahnforge::run_rank(ordinal, std::cout, std::cerr);
  if (*demo_cmd) return hahnforge::run_alphat_demo(std::cout, std::cerr);
  return hahnforge::kExitParseError;
}
