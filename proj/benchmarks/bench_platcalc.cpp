// Copyright 2026 The platcalc Authors
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

#include <random>

#include "platcalc/invariants.hpp"
#include "platcalc/manifold.hpp"
#include "platcalc/normalization.hpp"
#include "platcalc/search.hpp"
#include "platcalc/smith.hpp"

using namespace platcalc;

namespace {

BraidWord random_word(std::mt19937& rng, GroupContext ctx, int len) {
  std::vector<Letter> out;
  const int sigmas = ctx.strands - 1;
  for (int i = 0; i < len; ++i) {
    const int c = static_cast<int>(rng() % static_cast<unsigned>(sigmas + 2 * ctx.genus));
    const int sign = rng() % 2 ? 1 : -1;
    if (c < sigmas) out.push_back(sigma(c + 1, sign));
    else if (c < sigmas + ctx.genus) out.push_back(gen_a(c - sigmas + 1, sign));
    else out.push_back(gen_b(c - sigmas - ctx.genus + 1, sign));
  }
  return BraidWord(ctx, std::move(out));
}

void BM_ClosureReport(benchmark::State& state) {
  std::mt19937 rng(1);
  const BraidWord w = random_word(rng, {1, static_cast<int>(state.range(0))}, 200);
  for (auto _ : state) benchmark::DoNotOptimize(closure_report(w));
}
BENCHMARK(BM_ClosureReport)->Arg(2)->Arg(6)->Arg(12);

void BM_TorusBraid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(torus_braid(97, 41));
}
BENCHMARK(BM_TorusBraid);

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937 rng(2);
  const int n = static_cast<int>(state.range(0));
  std::vector<std::int64_t> data;
  for (int i = 0; i < n * n; ++i) data.push_back(static_cast<std::int64_t>(rng() % 41) - 20);
  const IntMatrix m(n, n, data);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(2)->Arg(6)->Arg(12);

void BM_Neighbors(benchmark::State& state) {
  std::mt19937 rng(3);
  const BraidWord w = free_reduce(random_word(rng, {1, 6}, 20));
  const ManifoldPresentation m = lens_space(5, 2);
  SearchConfig cfg;
  cfg.max_strands = 8;
  for (auto _ : state) benchmark::DoNotOptimize(neighbors(w, m, cfg));
}
BENCHMARK(BM_Neighbors);

void BM_SearchDepthTwo(benchmark::State& state) {
  const ManifoldPresentation m = lens_space(3, 1);
  const BraidWord a = parse_word("a1 s1 b1^-1", {1, 2});
  const BraidWord b = parse_word("s1 a1 s1 b1^-1 b1 s1^-1 b1 s1^-1", {1, 2});
  SearchConfig cfg;
  cfg.max_depth = 2;
  cfg.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_equivalent(a, b, m, cfg));
}
BENCHMARK(BM_SearchDepthTwo)->Arg(1)->Arg(4);

void BM_RemoveB(benchmark::State& state) {
  const ManifoldPresentation m = lens_space(5, 2);
  const BraidWord w = parse_word("a1 b1 s1^-1 b1 s2", {1, 4});
  for (auto _ : state) benchmark::DoNotOptimize(remove_b(w, m));
}
BENCHMARK(BM_RemoveB);

}  // namespace

BENCHMARK_MAIN();
