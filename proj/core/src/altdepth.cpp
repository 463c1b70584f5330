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


#include "pgsuite/altdepth.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "pgsuite/detail/tarjan.hpp"

namespace pgsuite {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

/**
 * Nesting depths for one component. local_of is an n-sized scratch array
 * holding kNone everywhere; it is restored before returning.
 */
std::vector<std::uint32_t> component_depths(const ParityGame& game, std::span<const VertexId> members,
                                            std::vector<std::uint32_t>& local_of, DeadlinePoller& poll)
{
    const std::size_t size = members.size();

    // local ids follow ascending (priority, vertex id), so each priority
    // bound selects a prefix of the local vertices
    std::vector<VertexId> order(members.begin(), members.end());
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return game.priority(a) < game.priority(b); });
    for (std::uint32_t i = 0; i < size; ++i) local_of[order[i]] = i;

    std::vector<std::vector<std::uint32_t>> adj(size);
    for (std::uint32_t i = 0; i < size; ++i) {
        for (VertexId w : game.successors(order[i])) {
            if (local_of[w] != kNone) adj[i].push_back(local_of[w]);
        }
        std::sort(adj[i].begin(), adj[i].end());
    }
    for (VertexId v : order) local_of[v] = kNone;

    std::vector<std::uint32_t> depth(size, 0);
    std::vector<std::uint32_t> comp_of;
    std::vector<std::uint32_t> best;
    std::vector<std::vector<std::uint32_t>> buckets;

    std::uint32_t begin = 0;
    while (begin < size) {
        const Priority p = game.priority(order[begin]);
        std::uint32_t end = begin;
        while (end < size && game.priority(order[end]) == p) ++end;

        // subgraph on local ids [0, end): priorities <= p
        auto succ = [&](std::uint32_t v) {
            const auto& a = adj[v];
            auto cut = std::lower_bound(a.begin(), a.end(), end);
            return std::span<const std::uint32_t>(a.data(), static_cast<std::size_t>(cut - a.begin()));
        };
        const std::uint32_t count = detail::tarjan_scc(end, succ, comp_of);

        best.assign(count, 0);
        buckets.assign(count, {});
        for (std::uint32_t x = 0; x < end; ++x) {
            poll.tick();
            buckets[comp_of[x]].push_back(x);
            if (x < begin) {
                const bool alternates = ((game.priority(order[x]) ^ p) & 1U) != 0;
                best[comp_of[x]] = std::max(best[comp_of[x]], depth[x] + (alternates ? 1U : 0U));
            }
        }
        // tarjan numbers sinks first, so sources have the highest ids
        for (std::uint32_t c = count; c-- > 0;) {
            for (std::uint32_t x : buckets[c]) {
                for (std::uint32_t w : succ(x)) {
                    poll.tick();
                    if (comp_of[w] != c) best[comp_of[w]] = std::max(best[comp_of[w]], best[c]);
                }
            }
        }
        for (std::uint32_t v = begin; v < end; ++v) depth[v] = std::max(1U, best[comp_of[v]]);
        begin = end;
    }

    // back to the caller's vertex order
    std::vector<std::uint32_t> result(size);
    for (std::uint32_t i = 0; i < size; ++i) {
        auto pos = std::lower_bound(members.begin(), members.end(), order[i]) - members.begin();
        result[static_cast<std::size_t>(pos)] = depth[i];
    }
    return result;
}

bool is_exact_scc(const ParityGame& game, std::span<const VertexId> members)
{
    const std::size_t n = game.num_vertices();
    if (members.empty()) return false;
    std::vector<std::uint8_t> in(n, 0);
    for (VertexId v : members) in[v] = 1;

    // reachable from members[0] forwards and backwards through the whole game
    auto sweep = [&](const Adjacency& adj) {
        std::vector<std::uint8_t> seen(n, 0);
        std::vector<VertexId> stack{members[0]};
        seen[members[0]] = 1;
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (VertexId w : adj[u]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return seen;
    };
    const auto fwd = sweep(game.successor_index());
    const auto bwd = sweep(game.predecessors());
    for (VertexId v = 0; v < n; ++v) {
        if ((fwd[v] && bwd[v]) != static_cast<bool>(in[v])) return false;
    }
    return true;
}

}  // namespace

std::uint32_t NestingDepthTable::max() const
{
    return depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
}

std::uint32_t NestingDepthTable::of(VertexId v) const
{
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) throw std::out_of_range("vertex not in component");
    return depth[static_cast<std::size_t>(it - vertices.begin())];
}

NestingDepthTable nesting_depths(const ParityGame& game, std::span<const VertexId> component,
                                 const Deadline& deadline)
{
    NestingDepthTable t;
    t.vertices.assign(component.begin(), component.end());
    std::sort(t.vertices.begin(), t.vertices.end());
    if (std::adjacent_find(t.vertices.begin(), t.vertices.end()) != t.vertices.end() ||
        (!t.vertices.empty() && t.vertices.back() >= game.num_vertices())) {
        throw std::invalid_argument("nesting_depths: component has repeated or out-of-range vertices");
    }
    if (!is_exact_scc(game, t.vertices)) {
        throw std::invalid_argument("nesting_depths: vertex set is not a strongly connected component");
    }
    std::vector<std::uint32_t> local_of(game.num_vertices(), kNone);
    DeadlinePoller poll(deadline);
    t.depth = component_depths(game, t.vertices, local_of, poll);
    return t;
}

AlternationDepth alternation_depth_detailed(const ParityGame& game, const SccDecomposition& sccs,
                                            const Deadline& deadline)
{
    AlternationDepth ad;
    ad.per_component.reserve(sccs.num_components());
    std::vector<std::uint32_t> local_of(game.num_vertices(), kNone);
    DeadlinePoller poll(deadline);
    for (const auto& members : sccs.components) {
        std::uint32_t nd = 1;
        // a single vertex has depth 1 whatever its edges
        if (members.size() > 1) {
            auto depths = component_depths(game, members, local_of, poll);
            nd = *std::max_element(depths.begin(), depths.end());
        }
        ad.per_component.push_back(nd);
        ad.alternation_depth = std::max(ad.alternation_depth, nd);
    }
    return ad;
}

std::uint32_t alternation_depth(const ParityGame& game, const Deadline& deadline)
{
    return alternation_depth_detailed(game, scc_decompose(game), deadline).alternation_depth;
}

}  // namespace pgsuite
