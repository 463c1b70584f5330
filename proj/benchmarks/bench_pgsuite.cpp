/*
 * Copyright 2026 The pgsuite Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <benchmark/benchmark.h>

#include "pgsuite/altdepth.hpp"
#include "pgsuite/generators.hpp"
#include "pgsuite/pgsolver.hpp"
#include "pgsuite/solve.hpp"
#include "pgsuite/stats.hpp"
#include "pgsuite/width.hpp"

using namespace pgsuite;

namespace {

ParityGame random_game(benchmark::State& state)
{
    return gen_random(static_cast<std::uint32_t>(state.range(0)), 1, 3, 20, 42);
}

void BM_Generate(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(random_game(state));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Generate)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity();

void BM_ParseWrite(benchmark::State& state)
{
    const std::string text = write_pgsolver(random_game(state));
    for (auto _ : state) benchmark::DoNotOptimize(parse_pgsolver(text));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseWrite)->RangeMultiplier(4)->Range(1 << 8, 1 << 16);

void BM_Diameter(benchmark::State& state)
{
    const ParityGame g = random_game(state);
    for (auto _ : state) benchmark::DoNotOptimize(diameter(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Diameter)->RangeMultiplier(2)->Range(1 << 7, 1 << 11)->Complexity();

void BM_Girth(benchmark::State& state)
{
    const ParityGame g = random_game(state);
    for (auto _ : state) benchmark::DoNotOptimize(girth(g));
}
BENCHMARK(BM_Girth)->RangeMultiplier(2)->Range(1 << 7, 1 << 11);

void BM_Neighbourhoods(benchmark::State& state)
{
    const ParityGame g = gen_random(1024, 1, 3, 20, 42);
    const auto k = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(neighbourhood_summary(g, k));
}
BENCHMARK(BM_Neighbourhoods)->DenseRange(1, 3);

void BM_Diamonds(benchmark::State& state)
{
    const ParityGame g = random_game(state);
    for (auto _ : state) benchmark::DoNotOptimize(count_diamonds(g));
}
BENCHMARK(BM_Diamonds)->RangeMultiplier(2)->Range(1 << 7, 1 << 10);

void BM_AlternationDepth(benchmark::State& state)
{
    const ParityGame g = random_game(state);
    for (auto _ : state) benchmark::DoNotOptimize(alternation_depth(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AlternationDepth)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Complexity();

void BM_TreewidthGreedy(benchmark::State& state)
{
    const ParityGame g = random_game(state);
    for (auto _ : state) benchmark::DoNotOptimize(treewidth_upper_greedy_degree(g));
}
BENCHMARK(BM_TreewidthGreedy)->RangeMultiplier(2)->Range(1 << 7, 1 << 10);

void BM_TreewidthMmw(benchmark::State& state)
{
    const ParityGame g = random_game(state);
    for (auto _ : state) benchmark::DoNotOptimize(treewidth_lower_mmw(g));
}
BENCHMARK(BM_TreewidthMmw)->RangeMultiplier(2)->Range(1 << 7, 1 << 10);

void BM_KellyWidth(benchmark::State& state)
{
    const ParityGame g = random_game(state);
    for (auto _ : state) benchmark::DoNotOptimize(kellywidth_upper(g));
}
BENCHMARK(BM_KellyWidth)->RangeMultiplier(2)->Range(1 << 7, 1 << 10);

void BM_ZielonkaRandom(benchmark::State& state)
{
    const ParityGame g = random_game(state);
    for (auto _ : state) benchmark::DoNotOptimize(solve_zielonka(g));
}
BENCHMARK(BM_ZielonkaRandom)->RangeMultiplier(4)->Range(1 << 6, 1 << 12);

void BM_ZielonkaLadder(benchmark::State& state)
{
    const ParityGame g = gen_ladder(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(solve_zielonka(g));
}
BENCHMARK(BM_ZielonkaLadder)->RangeMultiplier(4)->Range(1 << 4, 1 << 12);

void BM_ZielonkaJurdzinski(benchmark::State& state)
{
    const auto m = static_cast<std::uint32_t>(state.range(0));
    const ParityGame g = gen_jurdzinski(m, m);
    for (auto _ : state) benchmark::DoNotOptimize(solve_zielonka(g));
}
BENCHMARK(BM_ZielonkaJurdzinski)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
