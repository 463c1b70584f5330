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


#include "pgsuite/width.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <utility>

namespace pgsuite {

namespace {

using Lists = std::vector<std::vector<VertexId>>;

void insert_sorted(std::vector<VertexId>& list, VertexId x)
{
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it == list.end() || *it != x) list.insert(it, x);
}

void erase_sorted(std::vector<VertexId>& list, VertexId x)
{
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it != list.end() && *it == x) list.erase(it);
}

/// Vertices ordered by (current degree, id); the front is the next choice.
class DegreeQueue
{
public:
    explicit DegreeQueue(const Lists& lists)
    {
        degree_.resize(lists.size());
        for (VertexId v = 0; v < lists.size(); ++v) {
            degree_[v] = lists[v].size();
            queue_.insert({degree_[v], v});
        }
    }

    [[nodiscard]] bool empty() const { return queue_.empty(); }
    [[nodiscard]] VertexId front() const { return queue_.begin()->second; }

    void update(VertexId v, std::size_t degree)
    {
        if (degree_[v] == degree) return;
        queue_.erase({degree_[v], v});
        degree_[v] = degree;
        queue_.insert({degree, v});
    }

    void remove(VertexId v) { queue_.erase({degree_[v], v}); }

    [[nodiscard]] std::size_t degree(VertexId v) const { return degree_[v]; }

private:
    std::vector<std::size_t> degree_;
    std::set<std::pair<std::size_t, VertexId>> queue_;
};

}  // namespace

UndirectedView::UndirectedView(const ParityGame& game) : adjacency_(game.num_vertices())
{
    for (VertexId u = 0; u < game.num_vertices(); ++u) {
        for (VertexId w : game.successors(u)) {
            if (u == w) continue;
            adjacency_[u].push_back(w);
            adjacency_[w].push_back(u);
        }
    }
    for (auto& l : adjacency_) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
}

UndirectedView::UndirectedView(std::vector<std::vector<VertexId>> adjacency) : adjacency_(std::move(adjacency))
{
    const std::size_t n = adjacency_.size();
    Lists sym(n);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId w : adjacency_[u]) {
            if (w == u || w >= n) continue;
            sym[u].push_back(w);
            sym[w].push_back(u);
        }
    }
    for (auto& l : sym) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    adjacency_ = std::move(sym);
}

std::size_t UndirectedView::num_edges() const
{
    std::size_t total = 0;
    for (const auto& l : adjacency_) total += l.size();
    return total / 2;
}

std::uint32_t treewidth_upper_greedy_degree(const UndirectedView& graph, const Deadline& deadline)
{
    Lists adj = graph.adjacency();
    DegreeQueue queue(adj);
    DeadlinePoller poll(deadline, 6);
    std::uint32_t width = 0;
    std::vector<VertexId> merged;

    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.remove(v);
        const auto nv = std::move(adj[v]);
        adj[v].clear();
        width = std::max(width, static_cast<std::uint32_t>(nv.size()));

        // N(v) becomes a clique; v disappears
        for (VertexId u : nv) {
            poll.tick();
            merged.clear();
            std::set_union(adj[u].begin(), adj[u].end(), nv.begin(), nv.end(), std::back_inserter(merged));
            erase_sorted(merged, u);
            erase_sorted(merged, v);
            adj[u].swap(merged);
            queue.update(u, adj[u].size());
        }
    }
    return width;
}

std::uint32_t treewidth_upper_greedy_degree(const ParityGame& game, const Deadline& deadline)
{
    return treewidth_upper_greedy_degree(UndirectedView(game), deadline);
}

std::uint32_t treewidth_lower_mmw(const UndirectedView& graph, const Deadline& deadline)
{
    Lists adj = graph.adjacency();
    DegreeQueue queue(adj);
    DeadlinePoller poll(deadline, 6);
    std::uint32_t bound = 0;

    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.remove(v);
        const auto nv = std::move(adj[v]);
        adj[v].clear();
        bound = std::max(bound, static_cast<std::uint32_t>(nv.size()));
        if (nv.empty()) continue;

        // contract v into its minimum-degree neighbour
        VertexId target = nv.front();
        for (VertexId u : nv) {
            if (adj[u].size() < adj[target].size()) target = u;
        }
        erase_sorted(adj[target], v);
        for (VertexId x : nv) {
            poll.tick();
            if (x == target) continue;
            erase_sorted(adj[x], v);
            insert_sorted(adj[x], target);
            insert_sorted(adj[target], x);
            queue.update(x, adj[x].size());
        }
        queue.update(target, adj[target].size());
    }
    return bound;
}

std::uint32_t treewidth_lower_mmw(const ParityGame& game, const Deadline& deadline)
{
    return treewidth_lower_mmw(UndirectedView(game), deadline);
}

std::uint32_t kellywidth_upper(const ParityGame& game, const Deadline& deadline)
{
    const std::size_t n = game.num_vertices();
    Lists out(n);
    Lists in(n);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId w : game.successors(u)) {
            if (u == w) continue;
            out[u].push_back(w);
            in[w].push_back(u);
        }
    }
    for (auto& l : out) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    for (auto& l : in) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }

    DegreeQueue queue(out);
    DeadlinePoller poll(deadline, 6);
    std::uint32_t width = 0;
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.remove(v);
        const auto succ = std::move(out[v]);
        const auto pred = std::move(in[v]);
        out[v].clear();
        in[v].clear();
        width = std::max(width, static_cast<std::uint32_t>(succ.size()));

        for (VertexId w : succ) erase_sorted(in[w], v);
        for (VertexId u : pred) {
            erase_sorted(out[u], v);
            for (VertexId w : succ) {
                poll.tick();
                if (u == w) continue;
                insert_sorted(out[u], w);
                insert_sorted(in[w], u);
            }
            queue.update(u, out[u].size());
        }
    }
    return n == 0 ? 0 : width + 1;
}

}  // namespace pgsuite
