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

#include "hahnforge/io.hpp"

#include <sstream>

#include "json.hpp"

namespace hahnforge {

namespace {

using Json = nlohmann::ordered_json;

Json parse_doc(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

// Wraps errors from nlohmann and from the value constructors.
template <typename F>
auto decode(const char* what, F&& body) {
  try {
    return body();
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(std::string("bad ") + what + ": " + e.what());
  }
}

Rat rat_of(const Json& j) {
  if (!j.is_string()) throw FormatError("expected a rational string, got " + j.dump());
  try {
    return parse_rat(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json pl_json(const PLFunc& f) {
  Json out = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    out.push_back(Json::array({to_wire(f.breakpoints()[i]), to_wire(f.values()[i])}));
  }
  return out;
}

PLFunc pl_of(const Json& j) {
  if (!j.is_array()) throw FormatError("PL function must be an array");
  std::vector<Rat> xs;
  std::vector<Rat> ys;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw FormatError("PL breakpoint must be a pair");
    xs.push_back(rat_of(pair[0]));
    ys.push_back(rat_of(pair[1]));
  }
  return PLFunc(std::move(xs), std::move(ys));
}

Json set_json(const RatSet& s) {
  Json out = Json::array();
  for (const auto& c : s.components()) out.push_back(Json::array({to_wire(c.lo), to_wire(c.hi)}));
  return out;
}

RatSet set_of(const Json& j) {
  if (!j.is_array()) throw FormatError("set must be an array");
  std::vector<RatInterval> parts;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw FormatError("set component must be a pair");
    parts.push_back({rat_of(pair[0]), rat_of(pair[1])});
  }
  return RatSet(std::move(parts));
}

Json sequence_json(const NullSequence& s) {
  switch (s.kind) {
    case NullSequence::Kind::kZero:
      return {{"rule", "zero"}};
    case NullSequence::Kind::kHarmonic:
      return {{"rule", "harmonic"}, {"c", to_wire(s.coefficient)}};
    case NullSequence::Kind::kGeometric:
      return {{"rule", "geometric"}, {"c", to_wire(s.coefficient)}, {"q", to_wire(s.ratio)}};
  }
  return {};
}

NullSequence sequence_of(const Json& j) {
  const std::string rule = j.at("rule").get<std::string>();
  if (rule == "zero") return NullSequence::zero();
  if (rule == "harmonic") return NullSequence::harmonic(rat_of(j.at("c")));
  if (rule == "geometric") return NullSequence::geometric(rat_of(j.at("c")), rat_of(j.at("q")));
  throw FormatError("unknown tail rule '" + rule + "'");
}

std::string point_str(AlphaNPoint y) { return y.to_string(); }

Json pw_json(const PwFunc& f) {
  Json partition = Json::array();
  for (const auto& x : f.partition()) partition.push_back(to_wire(x));
  Json points = Json::array();
  for (const auto& v : f.point_values()) points.push_back(to_wire(v));
  Json pieces = Json::array();
  for (const auto& p : f.pieces()) {
    pieces.push_back(Json::array({to_wire(p.right_of_start), to_wire(p.left_of_end)}));
  }
  return {{"partition", partition}, {"point_values", points}, {"pieces", pieces}};
}

}  // namespace

std::string plfunc_to_json(const PLFunc& f) { return pl_json(f).dump(); }

PLFunc plfunc_from_json(std::string_view text) {
  return decode("PL function", [&] { return pl_of(parse_doc(text)); });
}

std::string ratset_to_json(const RatSet& s) { return set_json(s).dump(); }

RatSet ratset_from_json(std::string_view text) {
  return decode("set", [&] { return set_of(parse_doc(text)); });
}

std::string alphat_to_json(const AlphaTFunc& f) {
  Json blocks = Json::array();
  for (const auto& b : f.blocks()) {
    if (const auto* fin = std::get_if<FiniteBlock>(&b)) {
      blocks.push_back({{"kind", "finite"}, {"atoms", fin->atoms}, {"value", to_wire(fin->value)}});
    } else if (const auto* tail = std::get_if<TailBlock>(&b)) {
      blocks.push_back({{"kind", "tail"},
                        {"name", tail->name},
                        {"base", to_wire(tail->base)},
                        {"deviation", sequence_json(tail->deviation)}});
    } else {
      const auto& unc = std::get<UncountableBlock>(b);
      blocks.push_back({{"kind", "uncountable"}, {"tag", unc.tag}, {"value", to_wire(unc.value)}});
    }
  }
  return Json{{"limit", to_wire(f.limit())}, {"blocks", blocks}}.dump(2);
}

AlphaTFunc alphat_from_json(std::string_view text) {
  return decode("alphaT function", [&] {
    const Json doc = parse_doc(text);
    std::vector<AlphaTBlock> blocks;
    for (const auto& b : doc.at("blocks")) {
      const std::string kind = b.at("kind").get<std::string>();
      if (kind == "finite") {
        blocks.push_back(FiniteBlock{b.at("atoms").get<std::vector<std::string>>(), rat_of(b.at("value"))});
      } else if (kind == "tail") {
        blocks.push_back(TailBlock{b.at("name").get<std::string>(), rat_of(b.at("base")),
                                   sequence_of(b.at("deviation"))});
      } else if (kind == "uncountable") {
        blocks.push_back(UncountableBlock{b.at("tag").get<std::string>(), rat_of(b.at("value"))});
      } else {
        throw FormatError("unknown block kind '" + kind + "'");
      }
    }
    return AlphaTFunc(rat_of(doc.at("limit")), std::move(blocks));
  });
}

std::string block_product_to_json(const BlockProductFunc& f) {
  Json blocks = Json::array();
  for (const auto& b : f.blocks()) {
    blocks.push_back({{"support", {{"power", b.beta.support.power}, {"odd_only", b.beta.support.odd_only}}},
                      {"lower", pl_json(b.lower)},
                      {"upper", pl_json(b.upper)},
                      {"alpha", pl_json(b.alpha)},
                      {"vanishing", set_json(b.vanishing)}});
  }
  Json stages = Json::array();
  for (const auto& s : f.stages()) stages.push_back(set_json(s));
  return Json{{"theta", pl_json(f.theta())}, {"blocks", blocks}, {"stages", stages}}.dump(2);
}

BlockProductFunc block_product_from_json(std::string_view text) {
  return decode("block product", [&] {
    const Json doc = parse_doc(text);
    std::vector<SchwartzBlock> blocks;
    for (const auto& b : doc.at("blocks")) {
      const Json& sup = b.at("support");
      const AlphaNSubset support{sup.at("power").get<unsigned>(), sup.at("odd_only").get<bool>()};
      SchwartzBlock block = hahn_block(pl_of(b.at("lower")), pl_of(b.at("upper")),
                                       set_of(b.at("vanishing")), support);
      if (block.alpha != pl_of(b.at("alpha"))) {
        throw FormatError("alpha does not match the vanishing set");
      }
      blocks.push_back(std::move(block));
    }
    std::vector<RatSet> stages;
    for (const auto& s : doc.at("stages")) stages.push_back(set_of(s));
    return BlockProductFunc(pl_of(doc.at("theta")), std::move(blocks), std::move(stages));
  });
}

std::string block_product_samples_csv(const BlockProductFunc& f, std::span<const Rat> grid,
                                      std::uint64_t max_y) {
  std::ostringstream out;
  out << "x,y,f,f_exact\n";
  for (const Rat& x : grid) {
    auto row = [&](AlphaNPoint y) {
      const Rat v = f(x, y);
      out << to_decimal17(x) << ',' << y.to_string() << ',' << to_decimal17(v) << ',' << to_wire(v)
          << '\n';
    };
    for (std::uint64_t y = 1; y <= max_y; ++y) row(AlphaNPoint::at(y));
    row(AlphaNPoint::infinity());
  }
  return out.str();
}

std::string section_pair_to_json(const SectionPair& s) {
  Json samples = Json::array();
  for (const auto& row : s.samples) {
    samples.push_back({{"x", to_wire(row.x)},
                       {"g", to_wire(row.g)},
                       {"h", to_wire(row.h)},
                       {"argmin", point_str(row.argmin)},
                       {"argmax", point_str(row.argmax)}});
  }
  return Json{{"g", pw_json(s.g)}, {"h", pw_json(s.h)}, {"samples", samples}}.dump(2);
}

std::string section_pair_to_csv(const SectionPair& s) {
  std::ostringstream out;
  out << "x,g,h,argmin,argmax,x_exact,g_exact,h_exact\n";
  for (const auto& row : s.samples) {
    out << to_decimal17(row.x) << ',' << to_decimal17(row.g) << ',' << to_decimal17(row.h) << ','
        << row.argmin.to_string() << ',' << row.argmax.to_string() << ',' << to_wire(row.x) << ','
        << to_wire(row.g) << ',' << to_wire(row.h) << '\n';
  }
  return out.str();
}

std::string section_report_to_json(const SectionReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"x", to_wire(row.x)},
                    {"g", to_wire(row.g)},
                    {"h", to_wire(row.h)},
                    {"stage", row.stage},
                    {"argmin", point_str(row.argmin)},
                    {"argmax", point_str(row.argmax)}});
  }
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"x", to_wire(f.x)},
                        {"y", f.y ? Json(point_str(*f.y)) : Json(nullptr)},
                        {"value", to_wire(f.value)},
                        {"message", f.message}});
  }
  return Json{{"passed", r.passed()}, {"rows", rows}, {"failures", failures}}.dump(2);
}

}  // namespace hahnforge
