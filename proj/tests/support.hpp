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


#ifndef PGSUITE_TEST_SUPPORT_HPP
#define PGSUITE_TEST_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "pgsuite/game.hpp"

namespace testing_support {

using pgsuite::ParityGame;
using pgsuite::Player;
using pgsuite::Priority;
using pgsuite::VertexId;

/// owners: 0 = Even, 1 = Odd.
inline ParityGame make_game(const std::vector<Priority>& prio, const std::vector<int>& owner,
                            std::vector<std::vector<VertexId>> succ)
{
    std::vector<pgsuite::VertexInfo> info(prio.size());
    for (std::size_t v = 0; v < prio.size(); ++v) {
        info[v].priority = prio[v];
        info[v].owner = owner[v] == 0 ? Player::Even : Player::Odd;
    }
    return ParityGame(std::move(info), std::move(succ));
}

/// Same owner (Even) everywhere.
inline ParityGame make_game(const std::vector<Priority>& prio, std::vector<std::vector<VertexId>> succ)
{
    return make_game(prio, std::vector<int>(prio.size(), 0), std::move(succ));
}

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0 with the given priorities.
inline ParityGame cycle_game(const std::vector<Priority>& prio)
{
    const auto n = static_cast<VertexId>(prio.size());
    std::vector<std::vector<VertexId>> succ(n);
    for (VertexId v = 0; v < n; ++v) succ[v] = {static_cast<VertexId>((v + 1) % n)};
    return make_game(prio, std::move(succ));
}

/// Test-side random game, independent of the library generators.
inline ParityGame random_game(std::mt19937_64& rng, std::uint32_t n, std::uint32_t max_out, Priority max_prio,
                              double self_loop_bias = 0.0)
{
    std::vector<Priority> prio(n);
    std::vector<int> owner(n);
    std::vector<std::vector<VertexId>> succ(n);
    for (VertexId v = 0; v < n; ++v) {
        prio[v] = static_cast<Priority>(rng() % (max_prio + 1));
        owner[v] = static_cast<int>(rng() % 2);
        const std::uint32_t d = 1 + static_cast<std::uint32_t>(rng() % std::min(max_out, n));
        std::vector<VertexId> all(n);
        for (VertexId w = 0; w < n; ++w) all[w] = w;
        std::shuffle(all.begin(), all.end(), rng);
        succ[v].assign(all.begin(), all.begin() + d);
        if (self_loop_bias > 0.0 && std::uniform_real_distribution<double>(0, 1)(rng) < self_loop_bias) {
            if (std::find(succ[v].begin(), succ[v].end(), v) == succ[v].end()) succ[v].push_back(v);
        } else if (self_loop_bias < 0.0) {
            std::erase(succ[v], v);
            if (succ[v].empty()) succ[v].push_back((v + 1) % n);
        }
    }
    return make_game(prio, owner, std::move(succ));
}

/// All non-empty successor sets of size at most max_out over n vertices.
inline std::vector<std::vector<VertexId>> successor_choices(std::uint32_t n, std::uint32_t max_out)
{
    std::vector<std::vector<VertexId>> out;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        if (static_cast<std::uint32_t>(__builtin_popcount(mask)) > max_out) continue;
        std::vector<VertexId> s;
        for (VertexId w = 0; w < n; ++w) {
            if (mask >> w & 1U) s.push_back(w);
        }
        out.push_back(std::move(s));
    }
    return out;
}

/// Calls f(successor lists) for every total graph on n vertices with out-degree <= max_out.
inline void for_each_structure(std::uint32_t n, std::uint32_t max_out,
                               const std::function<void(const std::vector<std::vector<VertexId>>&)>& f)
{
    const auto choices = successor_choices(n, max_out);
    std::vector<std::size_t> idx(n, 0);
    std::vector<std::vector<VertexId>> succ(n);
    for (;;) {
        for (std::uint32_t v = 0; v < n; ++v) succ[v] = choices[idx[v]];
        f(succ);
        std::uint32_t i = 0;
        while (i < n && ++idx[i] == choices.size()) idx[i++] = 0;
        if (i == n) return;
    }
}

/// Calls f(vector) for every vector of length n over {0, ..., base-1}.
template <class T, class F>
void for_each_assignment(std::uint32_t n, T base, F&& f)
{
    std::vector<T> a(n, 0);
    for (;;) {
        f(a);
        std::uint32_t i = 0;
        while (i < n && ++a[i] == base) a[i++] = 0;
        if (i == n) return;
    }
}

}  // namespace testing_support

#endif
