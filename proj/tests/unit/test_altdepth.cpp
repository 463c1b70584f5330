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


#include <functional>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgsuite/altdepth.hpp"
#include "pgsuite/generators.hpp"
#include "pgsuite/scc.hpp"
#include "pgsuite/stats.hpp"
#include "support.hpp"

using namespace pgsuite;
using testing_support::cycle_game;
using testing_support::make_game;

namespace {

std::vector<VertexId> all_vertices(const ParityGame& g)
{
    std::vector<VertexId> v(g.num_vertices());
    for (VertexId i = 0; i < v.size(); ++i) v[i] = i;
    return v;
}

ParityGame with_priorities(const ParityGame& g, const std::function<Priority(Priority)>& f)
{
    std::vector<VertexInfo> info = g.vertices();
    std::vector<std::vector<VertexId>> succ(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        info[v].priority = f(info[v].priority);
        succ[v].assign(g.successors(v).begin(), g.successors(v).end());
    }
    return ParityGame(std::move(info), std::move(succ));
}

}  // namespace

TEST(NestingDepth, SingleVertex)
{
    ParityGame g = make_game({0}, {{0}});
    NestingDepthTable t = nesting_depths(g, all_vertices(g));
    EXPECT_EQ(t.of(0), 1U);
    EXPECT_EQ(t.max(), 1U);
}

TEST(NestingDepth, TwoCycle)
{
    ParityGame g = cycle_game({1, 2});
    NestingDepthTable t = nesting_depths(g, all_vertices(g));
    EXPECT_EQ(t.of(0), 1U);
    EXPECT_EQ(t.of(1), 2U);
}

TEST(NestingDepth, ThreeCycle)
{
    ParityGame g = cycle_game({0, 1, 2});
    NestingDepthTable t = nesting_depths(g, all_vertices(g));
    EXPECT_EQ(t.of(0), 1U);
    EXPECT_EQ(t.of(1), 2U);
    EXPECT_EQ(t.of(2), 3U);
    EXPECT_EQ(oracle::nesting_depths(g), (std::vector<std::uint32_t>{1, 2, 3}));
}

TEST(NestingDepth, PriorityBoundCutsPaths)
{
    // 0(p0) -> 1(p5) -> 2(p1) -> 0: the 0 -> 2 path passes priority 5, so nd(2) = 1.
    ParityGame g = cycle_game({0, 5, 1});
    NestingDepthTable t = nesting_depths(g, all_vertices(g));
    EXPECT_EQ(t.of(2), 1U);
    EXPECT_EQ(t.of(1), 2U);
    EXPECT_EQ(t.of(0), 1U);
}

TEST(NestingDepth, RejectsNonComponents)
{
    ParityGame g = make_game({0, 1}, {{1}, {1}});
    const std::vector<VertexId> both{0, 1};
    EXPECT_THROW(nesting_depths(g, both), std::invalid_argument);
    const std::vector<VertexId> outside{5};
    EXPECT_THROW(nesting_depths(g, outside), std::invalid_argument);
    const std::vector<VertexId> twice{1, 1};
    EXPECT_THROW(nesting_depths(g, twice), std::invalid_argument);
    const std::vector<VertexId> one{1};
    EXPECT_EQ(nesting_depths(g, one).of(1), 1U);
    EXPECT_THROW(static_cast<void>(nesting_depths(g, one).of(0)), std::out_of_range);
}

TEST(AlternationDepth, Examples)
{
    EXPECT_EQ(alternation_depth(cycle_game({0, 2, 4, 6})), 1U);
    EXPECT_EQ(alternation_depth(cycle_game({1, 2})), 2U);
    // SCC {0,1} with nd 1, SCC {2,3,4} with nd 3, linked 1 -> 2
    ParityGame g = make_game({2, 4, 0, 1, 2}, {{1}, {0, 2}, {3}, {4}, {2}});
    AlternationDepth ad = alternation_depth_detailed(g, scc_decompose(g));
    EXPECT_EQ(ad.alternation_depth, 3U);
    std::multiset<std::uint32_t> per(ad.per_component.begin(), ad.per_component.end());
    EXPECT_EQ(per, (std::multiset<std::uint32_t>{1, 3}));
    EXPECT_EQ(alternation_depth(ParityGame{}), 0U);
}

TEST(AlternationDepth, TrivialComponentsCountAsOne)
{
    ParityGame g = make_game({7, 0}, {{1}, {1}});
    EXPECT_EQ(alternation_depth(g), 1U);
}

TEST(AlternationDepth, CliqueAndRecursiveLadder)
{
    for (std::uint32_t n = 1; n <= 6; ++n) EXPECT_EQ(alternation_depth(gen_clique(n)), n);
    for (std::uint32_t n = 1; n <= 5; ++n) EXPECT_EQ(alternation_depth(gen_recursive_ladder(n)), 2 * n + 1);
}

TEST(AlternationDepth, MatchesOracleOnRandomGames)
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        const auto n = 1 + static_cast<std::uint32_t>(rng() % 12);
        ParityGame g = testing_support::random_game(rng, n, 3, static_cast<Priority>(rng() % 6));
        const auto expect = oracle::nesting_depths(g);
        SccDecomposition d = scc_decompose(g);
        for (const auto& c : d.components) {
            NestingDepthTable t = nesting_depths(g, c);
            for (VertexId v : c) ASSERT_EQ(t.of(v), expect[v]) << "vertex " << v << " in game " << i;
        }
        ASSERT_EQ(alternation_depth(g), oracle::alternation_depth(g));
    }
}

TEST(AlternationDepth, Invariants)
{
    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        const auto n = 1 + static_cast<std::uint32_t>(rng() % 40);
        ParityGame g = testing_support::random_game(rng, n, 3, 8);
        const std::uint32_t ad = alternation_depth(g);
        ASSERT_LE(ad, size_summary(g).num_priorities);
        ASSERT_GE(ad, 1U);
        ASSERT_EQ(alternation_depth(with_priorities(g, [](Priority p) { return p + 2; })), ad);

        std::vector<VertexInfo> flipped = g.vertices();
        std::vector<std::vector<VertexId>> succ(n);
        for (VertexId v = 0; v < n; ++v) {
            flipped[v].owner = opponent(flipped[v].owner);
            succ[v].assign(g.successors(v).begin(), g.successors(v).end());
        }
        ASSERT_EQ(alternation_depth(ParityGame(flipped, succ)), ad);

        SccDecomposition d = scc_decompose(g);
        for (VertexId v = 0; v < n; ++v) {
            std::erase_if(succ[v], [&](VertexId w) { return d.component_of[w] != d.component_of[v]; });
            if (succ[v].empty()) succ[v] = {v};  // keeps the game total; singleton stays nd 1
        }
        ASSERT_EQ(alternation_depth(ParityGame(g.vertices(), succ)), ad);
    }
}
