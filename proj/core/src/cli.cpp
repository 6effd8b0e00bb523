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

#include "hahnforge/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hahnforge/alphat.hpp"
#include "hahnforge/builder.hpp"
#include "hahnforge/io.hpp"
#include "hahnforge/sections.hpp"
#include "hahnforge/spaces.hpp"
#include "hahnforge/spec_dsl.hpp"

namespace hahnforge {

namespace {

namespace fs = std::filesystem;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

void make_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir + "': " + ec.message());
}

// The offending source line with a caret under the column.
void show_diagnostic(std::ostream& err, const std::string& path, const std::string& text, const SpecError& e) {
  const Diagnostic& d = e.diagnostic();
  err << path << ": " << e.what() << '\n';
  std::istringstream lines(text);
  std::string line;
  for (std::size_t i = 0; i < d.line && std::getline(lines, line); ++i) {
  }
  if (d.line >= 1 && !line.empty()) {
    err << "  " << line << '\n' << "  " << std::string(d.column > 0 ? d.column - 1 : 0, ' ') << "^\n";
  }
}

std::vector<Rat> grid_for(std::optional<std::uint64_t> requested, const ElaboratedSpec& spec) {
  const std::uint64_t n = requested.value_or(spec.grid.value_or(kDefaultGrid));
  if (n < 2) throw UsageError("--grid needs at least 2 points");
  return uniform_grid(n);
}

// Runs `body` with a loaded spec, mapping failures to exit codes.
template <typename Body>
int with_spec(const std::string& path, std::ostream& err, Body&& body) {
  std::string text;
  try {
    text = read_file(path);
    const ElaboratedSpec spec = load_spec(text);
    return body(spec);
  } catch (const SpecError& e) {
    show_diagnostic(err, path, text, e);
    return kExitParseError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoError;
  }
}

std::string describe(const AlphaTFunc& f) {
  std::string out;
  auto add = [&](const Rat& v, const std::string& chi) {
    if (v == 0) return;
    if (!out.empty()) out += v < 0 ? " - " : " + ";
    else if (v < 0) out += "-";
    const Rat a = rat_abs(v);
    if (a != 1) out += to_display(a) + "*";
    out += chi;
  };
  if (f.limit() != 0) out = to_display(f.limit());
  for (const auto& b : f.blocks()) {
    if (const auto* u = std::get_if<UncountableBlock>(&b)) {
      add(Rat(u->value - f.limit()), "χ_{" + u->tag + "}");
    } else if (const auto* fin = std::get_if<FiniteBlock>(&b)) {
      std::string atoms;
      for (const auto& a : fin->atoms) atoms += (atoms.empty() ? "" : ",") + a;
      add(Rat(fin->value - f.limit()), "χ_{" + atoms + "}");
    } else {
      const auto& t = std::get<TailBlock>(b);
      add(Rat(t.base - f.limit()), "χ_{" + t.name + "}");
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

int run_synth(const SynthOptions& opts, std::ostream& out, std::ostream& err) {
  return with_spec(opts.spec_path, err, [&](const ElaboratedSpec& spec) {
    const StableFamily family = spec.family();
    const std::vector<Rat> grid = grid_for(opts.grid, spec);
    const BlockProductFunc f = synthesize(family);
    make_dir(opts.out_dir);
    const fs::path dir(opts.out_dir);
    write_file(dir / "synth.json", block_product_to_json(f));
    write_file(dir / "samples.csv", block_product_samples_csv(f, grid, opts.sample_max_y));
    out << "synthesized " << f.blocks().size() << " blocks from " << family.size() << " members\n"
        << "wrote " << (dir / "synth.json").string() << '\n'
        << "wrote " << (dir / "samples.csv").string() << " (" << grid.size() << " x "
        << opts.sample_max_y + 1 << " samples)\n";
    return kExitOk;
  });
}

int run_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  return with_spec(opts.spec_path, err, [&](const ElaboratedSpec& spec) {
    const StableFamily family = spec.family();
    const std::vector<Rat> grid = grid_for(opts.grid, spec);
    const BlockProductFunc f = synthesize(family);
    const SectionReport report = verify_synthesis(f, family, grid);
    if (opts.verbose) {
      for (const auto& row : report.rows) {
        out << "x=" << to_display(row.x) << " g=" << to_display(row.g) << " h=" << to_display(row.h)
            << " stage=" << row.stage << " argmin=" << row.argmin.to_string()
            << " argmax=" << row.argmax.to_string() << '\n';
      }
    }
    for (const auto& fl : report.failures) {
      out << "FAIL x=" << to_display(fl.x);
      if (fl.y) out << " y=" << fl.y->to_string();
      out << " value=" << to_display(fl.value) << ": " << fl.message << '\n';
    }
    if (opts.report_path) write_file(*opts.report_path, section_report_to_json(report));
    out << "verify: " << family.size() << " members, " << report.rows.size() << " grid points, "
        << report.failures.size() << " failures: " << (report.passed() ? "PASS" : "FAIL") << '\n';
    return report.passed() ? kExitOk : kExitVerifyFailed;
  });
}

int run_sections(const SectionsOptions& opts, std::ostream& out, std::ostream& err) {
  return with_spec(opts.spec_path, err, [&](const ElaboratedSpec& spec) {
    if (!spec.tail_family) throw UsageError("sections needs a spec with a 'limit' line");
    const std::vector<Rat> grid = grid_for(opts.grid, spec);
    const SectionPair sections = tail_sections(*spec.tail_family, grid);
    if (opts.out_dir) {
      make_dir(*opts.out_dir);
      const fs::path dir(*opts.out_dir);
      write_file(dir / "sections.json", section_pair_to_json(sections));
      write_file(dir / "sections.csv", section_pair_to_csv(sections));
      out << "wrote " << (dir / "sections.json").string() << '\n'
          << "wrote " << (dir / "sections.csv").string() << '\n';
    } else {
      out << section_pair_to_json(sections) << '\n';
    }
    return kExitOk;
  });
}

int run_rank(const std::string& ordinal, std::ostream& out, std::ostream& err) {
  try {
    const OrdinalCNF top = parse_ordinal(ordinal);
    out << scattered_rank(OrdinalCompact{top}) << '\n';
    return kExitOk;
  } catch (const OrdinalParseError& e) {
    err << "column " << e.column() << ": " << e.what() << '\n'
        << "  " << ordinal << '\n'
        << "  " << std::string(e.column() > 0 ? e.column() - 1 : 0, ' ') << "^\n";
    return kExitParseError;
  }
}

int run_alphat_demo(std::ostream& out, std::ostream& /*err*/) {
  const DiagProductFunc f = diag_example();
  out << "f on aT x aT, T = T0 u T1 u T2 (each uncountable)\n"
      << "f(t,t) = 0 on T0, 1 on T1, -1 on T2; f = 0 off the diagonal\n";

  std::vector<DiagPoint> probes = {DiagPoint::infinity()};
  for (std::size_t i = 0; i < f.blocks.size(); ++i) probes.push_back(DiagPoint::in(i, "t" + std::to_string(i)));
  bool separate = true;
  for (const auto& p : probes) {
    const std::string where = p.block ? p.atom + " in " + f.blocks[*p.block].tag : "inf";
    const AlphaTFunc xs = x_section(f, p);
    const AlphaTFunc ys = y_section(f, p);
    const bool ok = static_cast<bool>(at_is_continuous(xs)) && static_cast<bool>(at_is_continuous(ys));
    separate = separate && ok;
    out << "section at " << where << " = " << describe(xs) << ": " << (ok ? "continuous" : "NOT continuous")
        << '\n';
  }

  const ExtremalSections s = at_sections(f);
  bool expected = separate;
  auto verdict = [&](const char* label, const AlphaTFunc& g) {
    const auto stable = at_baire_one_cocountable(g);
    out << label << " = " << describe(g) << ": ";
    if (stable) {
      out << "constant off countable " << stable->to_string() << '\n';
      expected = false;
    } else {
      out << "not Baire-one\n";
    }
  };
  verdict("g", s.min);
  verdict("h", s.max);
  return expected ? kExitOk : kExitVerifyFailed;
}

}  // namespace hahnforge
