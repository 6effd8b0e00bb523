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

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "hahnforge/io.hpp"
#include "json.hpp"
#include "support/alphat_cases.hpp"
#include "support/gen.hpp"

using namespace hahnforge;
using Json = nlohmann::json;

namespace {

Rat q(long n, long d = 1) { return make_rat(n, d); }

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream cs(line);
    for (std::string cell; std::getline(cs, cell, ',');) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

void check_same_blocks(const BlockProductFunc& a, const BlockProductFunc& b) {
  CHECK(a.theta() == b.theta());
  CHECK(a.stages() == b.stages());
  REQUIRE(a.blocks().size() == b.blocks().size());
  for (std::size_t i = 0; i < a.blocks().size(); ++i) {
    const auto& x = a.blocks()[i];
    const auto& y = b.blocks()[i];
    CHECK(x.lower == y.lower);
    CHECK(x.upper == y.upper);
    CHECK(x.alpha == y.alpha);
    CHECK(x.vanishing == y.vanishing);
    CHECK(x.beta.support == y.beta.support);
  }
}

}  // namespace

TEST_CASE("PL functions and sets round trip") {
  const PLFunc f({q(0), q(1, 3), q(1)}, {q(1, 2), q(-7, 5), q(2)});
  CHECK(plfunc_to_json(f) == R"([["0/1","1/2"],["1/3","-7/5"],["1/1","2/1"]])");
  CHECK(plfunc_from_json(plfunc_to_json(f)) == f);

  const RatSet s({{q(0), q(1, 4)}, {q(1, 2), q(1, 2)}});
  CHECK(ratset_from_json(ratset_to_json(s)) == s);
  CHECK(ratset_from_json("[]") == RatSet());

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const PLFunc p = hftest::random_pl(rng, 6, 1000);
    REQUIRE(plfunc_from_json(plfunc_to_json(p)) == p);
    const RatSet z = equality_set(p, hftest::random_pl(rng));
    REQUIRE(ratset_from_json(ratset_to_json(z)) == z);
  }
}

TEST_CASE("malformed documents raise FormatError") {
  CHECK_THROWS_AS(plfunc_from_json("not json"), FormatError);
  CHECK_THROWS_AS(plfunc_from_json("{}"), FormatError);
  CHECK_THROWS_AS(plfunc_from_json(R"([["0/1"]])"), FormatError);
  CHECK_THROWS_AS(plfunc_from_json(R"([[0, 1], [1, 1]])"), FormatError);
  CHECK_THROWS_AS(plfunc_from_json(R"([["0/1","1/0"],["1/1","1/1"]])"), FormatError);
  // does not cover [0,1]
  CHECK_THROWS_AS(plfunc_from_json(R"([["0/1","1/1"],["1/2","1/1"]])"), FormatError);
  CHECK_THROWS_AS(ratset_from_json(R"([["1/2","1/4"]])"), FormatError);
  CHECK_THROWS_AS(alphat_from_json(R"({"limit":"0/1","blocks":[{"kind":"odd"}]})"), FormatError);
  CHECK_THROWS_AS(alphat_from_json(R"({"blocks":[]})"), FormatError);
  CHECK_THROWS_AS(alphat_from_json(
                      R"({"limit":"0/1","blocks":[{"kind":"tail","name":"t","base":"0/1","deviation":{"rule":"geometric","c":"1/1","q":"2/1"}}]})"),
                  FormatError);
  CHECK_THROWS_AS(block_product_from_json("[]"), FormatError);
}

TEST_CASE("alphaT functions round trip") {
  for (const auto& c : hftest::alphat_cases()) {
    CAPTURE(c.label);
    const std::string text = alphat_to_json(c.f);
    CHECK(alphat_from_json(text) == c.f);
    const Json doc = Json::parse(text);
    CHECK(doc["blocks"].size() == c.f.blocks().size());
    CHECK(parse_rat(doc["limit"].get<std::string>()) == c.f.limit());
  }
  const AlphaTFunc g(q(1), {TailBlock{"t", q(1), NullSequence::geometric(q(3), q(1, 2))},
                            FiniteBlock{{"a", "b"}, q(-2)}, UncountableBlock{"T", q(1, 3)}});
  const Json doc = Json::parse(alphat_to_json(g));
  CHECK(doc["blocks"][0]["deviation"]["rule"] == "geometric");
  CHECK(doc["blocks"][0]["deviation"]["q"] == "1/2");
  CHECK(doc["blocks"][1]["atoms"] == Json::array({"a", "b"}));
  CHECK(alphat_from_json(alphat_to_json(g)) == g);
}

TEST_CASE("block products round trip") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const BlockProductFunc f = synthesize(hftest::random_family(rng));
    const BlockProductFunc back = block_product_from_json(block_product_to_json(f));
    check_same_blocks(f, back);
    for (const Rat& x : hftest::dyadic_grid(3)) {
      for (std::uint64_t y = 1; y <= 64; ++y) REQUIRE(back(x, AlphaNPoint::at(y)) == f(x, AlphaNPoint::at(y)));
    }
  }

  // a tampered alpha is rejected
  const BlockProductFunc f =
      synthesize(StableFamily({PLFunc::constant(q(0)), PLFunc::affine(q(1), q(-1, 2))}));
  Json doc = Json::parse(block_product_to_json(f));
  doc["blocks"][1]["alpha"] = Json::array({Json::array({"0/1", "1/1"}), Json::array({"1/1", "1/1"})});
  CHECK_THROWS_AS(block_product_from_json(doc.dump()), FormatError);
  // overlapping supports
  doc = Json::parse(block_product_to_json(f));
  doc["blocks"][1]["support"] = doc["blocks"][0]["support"];
  CHECK_THROWS_AS(block_product_from_json(doc.dump()), FormatError);
}

TEST_CASE("sample CSV carries exact and float values") {
  const BlockProductFunc f =
      synthesize(StableFamily({PLFunc::constant(q(0)), PLFunc::affine(q(1), q(-1, 2))}));
  const std::vector<Rat> grid = hftest::dyadic_grid(2);
  const auto rows = csv_rows(block_product_samples_csv(f, grid, 16));
  REQUIRE(rows.size() == 1 + grid.size() * 17);
  CHECK(rows[0] == std::vector<std::string>{"x", "y", "f", "f_exact"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].size() == 4);
    const Rat x = grid[(i - 1) / 17];
    const AlphaNPoint y = rows[i][1] == "inf" ? AlphaNPoint::infinity() : AlphaNPoint::at(std::stoull(rows[i][1]));
    const Rat v = f(x, y);
    REQUIRE(parse_rat(rows[i][3]) == v);
    REQUIRE(std::abs(std::stod(rows[i][2]) - v.get_d()) <= 1e-15);
    REQUIRE(std::abs(std::stod(rows[i][0]) - x.get_d()) <= 1e-15);
  }
  CHECK(rows[17][1] == "inf");
}

TEST_CASE("section pairs and reports") {
  const TailFamily t{{PLFunc::constant(q(0)), PLFunc::affine(q(1), q(-1, 2))},
                     PLFunc::constant(q(0)),
                     NullSequence::harmonic(q(1)),
                     PLFunc::affine(q(-1), q(0))};
  const auto grid = uniform_grid(5);
  const SectionPair s = tail_sections(t, grid);

  const Json doc = Json::parse(section_pair_to_json(s));
  CHECK(doc["samples"].size() == 5);
  CHECK(doc["samples"][4]["g"] == "-1/3");
  CHECK(doc["samples"][4]["argmin"] == AlphaNPoint::at(3).to_string());
  CHECK(doc["g"]["partition"].size() == s.g.partition().size());
  CHECK(doc["h"]["pieces"].size() == s.h.pieces().size());

  const auto rows = csv_rows(section_pair_to_csv(s));
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == std::vector<std::string>{"x", "g", "h", "argmin", "argmax", "x_exact", "g_exact", "h_exact"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(parse_rat(rows[i][5]) == s.samples[i - 1].x);
    REQUIRE(parse_rat(rows[i][6]) == s.samples[i - 1].g);
    REQUIRE(parse_rat(rows[i][7]) == s.samples[i - 1].h);
  }

  SectionReport r;
  r.rows.push_back({q(1, 2), q(0), q(0), 1, AlphaNPoint::at(2), AlphaNPoint::at(1)});
  r.failures.push_back({q(1, 4), std::nullopt, q(3), "boom"});
  const Json rep = Json::parse(section_report_to_json(r));
  CHECK(rep["passed"] == false);
  CHECK(rep["rows"][0]["stage"] == 1);
  CHECK(rep["failures"][0]["y"].is_null());
  CHECK(rep["failures"][0]["message"] == "boom");
  CHECK(Json::parse(section_report_to_json(SectionReport{}))["passed"] == true);
}
