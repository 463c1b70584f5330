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


#ifndef PGSUITE_STATS_HPP
#define PGSUITE_STATS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pgsuite/deadline.hpp"
#include "pgsuite/game.hpp"

namespace pgsuite {

struct SizeSummary
{
    std::size_t num_vertices = 0;
    std::size_t num_even_vertices = 0;
    std::size_t num_odd_vertices = 0;
    std::size_t num_edges = 0;
    std::size_t num_priorities = 0;
    std::map<Priority, std::size_t> count_per_priority;
    bool is_solitaire = false;

    bool operator==(const SizeSummary&) const = default;
};

SizeSummary size_summary(const ParityGame& game);

struct MinMaxAvg
{
    std::size_t min = 0;
    std::size_t max = 0;
    double avg = 0.0;

    bool operator==(const MinMaxAvg&) const = default;
};

struct DegreeSummary
{
    MinMaxAvg in;
    MinMaxAvg out;
    MinMaxAvg degree;  // distinct neighbours in either direction
};

DegreeSummary degree_summary(const ParityGame& game);

struct BfsMetrics
{
    std::size_t height = 0;
    std::vector<std::size_t> vertices_per_level;
    std::size_t max_queue_size = 0;
    std::size_t back_level_edge_count = 0;   // level(u) > level(v)
    std::size_t max_back_level_edge_length = 0;
    std::size_t same_level_edge_count = 0;   // level(u) == level(v), self-loops included
    std::size_t unreachable_count = 0;
};

/// BFS from root; the queue size is sampled each time a vertex is dequeued (before removal).
BfsMetrics bfs_metrics(const ParityGame& game, VertexId root);

struct DfsMetrics
{
    std::size_t max_stack_size = 0;
    std::size_t tree_edges = 0;
    std::size_t back_edges = 0;
    std::size_t forward_edges = 0;
    std::size_t cross_edges = 0;
    std::size_t visited = 0;
};

/// Iterative DFS from root, successors in ascending id order.
DfsMetrics dfs_metrics(const ParityGame& game, VertexId root);

/// Longest shortest path over ordered pairs (u, v) with v reachable from u.
std::size_t diameter(const ParityGame& game, const Deadline& deadline = {});

/// Length of the shortest directed cycle; nullopt only for acyclic (non-total) graphs.
std::optional<std::size_t> girth(const ParityGame& game, const Deadline& deadline = {});

/**
 * Diamonds (u, v, v', w): u->v, u->v', v->w, v'->w, v != v'. The pair {v, v'}
 * is unordered. Even (odd) diamonds have u, v, v' all owned by Even (Odd).
 */
struct DiamondCounts
{
    std::uint64_t total = 0;
    std::uint64_t even = 0;
    std::uint64_t odd = 0;

    bool operator==(const DiamondCounts&) const = default;
};

DiamondCounts count_diamonds(const ParityGame& game, const Deadline& deadline = {});

struct NeighbourhoodSummary
{
    std::uint32_t k = 1;
    std::size_t min_size = 0;
    std::size_t max_size = 0;
    double avg_size = 0.0;
    double min_clustering = 0.0;
    double max_clustering = 0.0;
    double avg_clustering = 0.0;
};

/**
 * N_k(v) holds every w != v at distance at most k from v. The clustering
 * coefficient of v is the number of edges of the subgraph induced by N_k(v)
 * divided by |N_k(v)|, and 0 for an empty neighbourhood.
 */
NeighbourhoodSummary neighbourhood_summary(const ParityGame& game, std::uint32_t k,
                                           const Deadline& deadline = {});

}  // namespace pgsuite

#endif
