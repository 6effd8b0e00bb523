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

#include <benchmark/benchmark.h>

#include "hahnforge/builder.hpp"
#include "hahnforge/spec_dsl.hpp"
#include "support/fuzz_spec.hpp"
#include "support/gen.hpp"

using namespace hahnforge;

namespace {

std::vector<StableFamily> families(int count, int members) {
  std::mt19937_64 rng(7);
  std::vector<StableFamily> out;
  for (int i = 0; i < count; ++i) {
    std::vector<PLFunc> m;
    for (int k = 0; k < members; ++k) m.push_back(hftest::random_pl(rng, 8));
    out.emplace_back(std::move(m));
  }
  return out;
}

void BM_LatticeMin(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<PLFunc> fs;
  for (int i = 0; i < 64; ++i) fs.push_back(hftest::random_pl(rng, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pl_min(fs[i % 64], fs[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK(BM_LatticeMin)->Arg(4)->Arg(16)->Arg(64);

void BM_Synthesize(benchmark::State& state) {
  const auto fams = families(16, static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(fams[i++ % fams.size()]));
}
BENCHMARK(BM_Synthesize)->DenseRange(2, 6, 2);

void BM_Verify(benchmark::State& state) {
  const auto fams = families(8, 4);
  std::vector<BlockProductFunc> fs;
  for (const auto& u : fams) fs.push_back(synthesize(u));
  const std::vector<Rat> grid = uniform_grid(static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    const std::size_t k = i++ % fs.size();
    benchmark::DoNotOptimize(verify_synthesis(fs[k], fams[k], grid));
  }
}
BENCHMARK(BM_Verify)->Arg(17)->Arg(65)->Unit(benchmark::kMillisecond);

void BM_ParseSpec(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<std::string> texts;
  for (int i = 0; i < 32; ++i) texts.push_back(hftest::random_spec(rng).text);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(load_spec(texts[i++ % texts.size()]));
}
BENCHMARK(BM_ParseSpec);

}  // namespace

BENCHMARK_MAIN();
