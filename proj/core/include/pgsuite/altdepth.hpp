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


#ifndef PGSUITE_ALTDEPTH_HPP
#define PGSUITE_ALTDEPTH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "pgsuite/deadline.hpp"
#include "pgsuite/game.hpp"
#include "pgsuite/scc.hpp"

namespace pgsuite {

/**
 * Nesting depth of every vertex of one strongly connected component.
 *
 * For vertices x, v of the component write x ->*_k v when there is a path from
 * x to v inside the component visiting only vertices of priority <= k. Then
 *
 *   nd(v) = max( 1,
 *                nd(x)     for x != v, x ->*_{p(v)} v, p(x) = p(v) mod 2,
 *                nd(x) + 1 for x ->*_{p(v)} v,         p(x) != p(v) mod 2 )
 *
 * taken as the least solution. Every x that can reach v under the bound p(v)
 * has p(x) <= p(v), and vertices of equal priority contribute nothing beyond
 * what reaches them from below, so
 *
 *   nd(v) = max(1, max { nd(x) + [p(x) != p(v) mod 2] : p(x) < p(v), x ->*_{p(v)} v }).
 *
 * The table is filled one priority at a time in ascending order, propagating
 * the maximum contribution over the condensation of the subgraph with
 * priorities <= p.
 */
struct NestingDepthTable
{
    std::vector<VertexId> vertices;   // the component, ascending
    std::vector<std::uint32_t> depth; // depth[i] belongs to vertices[i]

    [[nodiscard]] std::uint32_t max() const;
    [[nodiscard]] std::uint32_t of(VertexId v) const;
};

/// Throws std::invalid_argument unless component is exactly one SCC of game.
NestingDepthTable nesting_depths(const ParityGame& game, std::span<const VertexId> component,
                                 const Deadline& deadline = {});

struct AlternationDepth
{
    std::uint32_t alternation_depth = 0;  // 0 only for the empty game
    std::vector<std::uint32_t> per_component;  // nd(C), indexed like the decomposition
};

AlternationDepth alternation_depth_detailed(const ParityGame& game, const SccDecomposition& sccs,
                                            const Deadline& deadline = {});

/// Maximum nesting depth over all SCCs.
std::uint32_t alternation_depth(const ParityGame& game, const Deadline& deadline = {});

}  // namespace pgsuite

#endif
