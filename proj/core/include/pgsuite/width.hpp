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


#ifndef PGSUITE_WIDTH_HPP
#define PGSUITE_WIDTH_HPP

#include <cstdint>
#include <vector>

#include "pgsuite/deadline.hpp"
#include "pgsuite/game.hpp"

namespace pgsuite {

/// The game graph with edge directions forgotten and self-loops dropped.
class UndirectedView
{
public:
    explicit UndirectedView(const ParityGame& game);
    explicit UndirectedView(std::vector<std::vector<VertexId>> adjacency);

    [[nodiscard]] std::size_t num_vertices() const { return adjacency_.size(); }
    [[nodiscard]] std::size_t num_edges() const;
    [[nodiscard]] const std::vector<VertexId>& neighbours(VertexId v) const { return adjacency_[v]; }
    [[nodiscard]] const std::vector<std::vector<VertexId>>& adjacency() const { return adjacency_; }

private:
    std::vector<std::vector<VertexId>> adjacency_;  // sorted, symmetric, loop-free
};

/*
 * All three heuristics break ties by the lowest vertex id, so their results
 * are a function of the labelled graph.
 */

/// Greedy degree elimination: an upper bound on treewidth.
std::uint32_t treewidth_upper_greedy_degree(const UndirectedView& graph, const Deadline& deadline = {});
std::uint32_t treewidth_upper_greedy_degree(const ParityGame& game, const Deadline& deadline = {});

/// Minor min-width: a lower bound on treewidth.
std::uint32_t treewidth_lower_mmw(const UndirectedView& graph, const Deadline& deadline = {});
std::uint32_t treewidth_lower_mmw(const ParityGame& game, const Deadline& deadline = {});

/**
 * Directed elimination ordering built greedily by minimum current out-degree.
 * Eliminating v adds u -> w for every in-neighbour u and out-neighbour w of v
 * (u != w). Returns 1 + the largest out-degree met at elimination, an upper
 * bound on Kelly-width.
 */
std::uint32_t kellywidth_upper(const ParityGame& game, const Deadline& deadline = {});

}  // namespace pgsuite

#endif
