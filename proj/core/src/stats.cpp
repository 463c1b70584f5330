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


#include "pgsuite/stats.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace pgsuite {

namespace {

constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

class MinMaxAccumulator
{
public:
    void add(std::size_t x)
    {
        min_ = std::min(min_, x);
        max_ = std::max(max_, x);
        sum_ += x;
        ++count_;
    }

    [[nodiscard]] MinMaxAvg result() const
    {
        if (count_ == 0) return {};
        return {min_, max_, static_cast<double>(sum_) / static_cast<double>(count_)};
    }

private:
    std::size_t min_ = std::numeric_limits<std::size_t>::max();
    std::size_t max_ = 0;
    std::uint64_t sum_ = 0;
    std::size_t count_ = 0;
};

void check_root(const ParityGame& game, VertexId root)
{
    if (root >= game.num_vertices()) {
        throw std::out_of_range("root vertex " + std::to_string(root) + " out of range");
    }
}

/// Reusable BFS scratch space; distances are valid only for the current stamp.
class BfsScratch
{
public:
    explicit BfsScratch(std::size_t n) : dist_(n, 0), stamp_(n, 0) { queue_.reserve(n); }

    void reset()
    {
        ++current_;
        queue_.clear();
    }
    [[nodiscard]] bool seen(VertexId v) const { return stamp_[v] == current_; }
    [[nodiscard]] std::uint32_t dist(VertexId v) const { return dist_[v]; }
    void visit(VertexId v, std::uint32_t d)
    {
        stamp_[v] = current_;
        dist_[v] = d;
        queue_.push_back(v);
    }
    std::vector<VertexId>& queue() { return queue_; }

private:
    std::vector<std::uint32_t> dist_;
    std::vector<std::uint32_t> stamp_;
    std::vector<VertexId> queue_;
    std::uint32_t current_ = 0;
};

}  // namespace

SizeSummary size_summary(const ParityGame& game)
{
    SizeSummary s;
    s.num_vertices = game.num_vertices();
    s.num_edges = game.num_edges();
    for (const auto& info : game.vertices()) {
        if (info.owner == Player::Even) {
            ++s.num_even_vertices;
        } else {
            ++s.num_odd_vertices;
        }
        ++s.count_per_priority[info.priority];
    }
    s.num_priorities = s.count_per_priority.size();
    s.is_solitaire = s.num_even_vertices == 0 || s.num_odd_vertices == 0;
    return s;
}

DegreeSummary degree_summary(const ParityGame& game)
{
    const Adjacency pred = game.predecessors();
    MinMaxAccumulator in;
    MinMaxAccumulator out;
    MinMaxAccumulator both;
    for (VertexId v = 0; v < game.num_vertices(); ++v) {
        auto s = game.successors(v);
        auto p = pred[v];
        in.add(p.size());
        out.add(s.size());
        // both lists are sorted: count the size of their union
        std::size_t i = 0;
        std::size_t j = 0;
        std::size_t distinct = 0;
        while (i < s.size() || j < p.size()) {
            if (j == p.size() || (i < s.size() && s[i] < p[j])) {
                ++i;
            } else if (i == s.size() || p[j] < s[i]) {
                ++j;
            } else {
                ++i;
                ++j;
            }
            ++distinct;
        }
        both.add(distinct);
    }
    return {in.result(), out.result(), both.result()};
}

BfsMetrics bfs_metrics(const ParityGame& game, VertexId root)
{
    check_root(game, root);
    const std::size_t n = game.num_vertices();
    std::vector<std::uint32_t> level(n, kUnseen);
    std::deque<VertexId> queue;
    BfsMetrics m;

    level[root] = 0;
    queue.push_back(root);
    std::size_t reached = 0;
    while (!queue.empty()) {
        m.max_queue_size = std::max(m.max_queue_size, queue.size());
        const VertexId u = queue.front();
        queue.pop_front();
        ++reached;
        const std::uint32_t lu = level[u];
        if (m.vertices_per_level.size() <= lu) m.vertices_per_level.resize(lu + 1, 0);
        ++m.vertices_per_level[lu];

        for (VertexId w : game.successors(u)) {
            if (level[w] == kUnseen) {
                level[w] = lu + 1;
                queue.push_back(w);
                continue;
            }
            if (level[w] < lu) {
                ++m.back_level_edge_count;
                m.max_back_level_edge_length = std::max<std::size_t>(m.max_back_level_edge_length, lu - level[w]);
            } else if (level[w] == lu) {
                ++m.same_level_edge_count;
            }
        }
    }
    m.height = m.vertices_per_level.size() - 1;
    m.unreachable_count = n - reached;
    return m;
}

DfsMetrics dfs_metrics(const ParityGame& game, VertexId root)
{
    check_root(game, root);
    const std::size_t n = game.num_vertices();
    std::vector<std::uint32_t> discovered(n, kUnseen);
    std::vector<bool> on_stack(n, false);
    struct Frame
    {
        VertexId v;
        std::size_t next;
    };
    std::vector<Frame> stack;
    DfsMetrics m;
    std::uint32_t time = 0;

    auto push = [&](VertexId v) {
        discovered[v] = time++;
        on_stack[v] = true;
        stack.push_back({v, 0});
        m.max_stack_size = std::max(m.max_stack_size, stack.size());
        ++m.visited;
    };

    push(root);
    while (!stack.empty()) {
        Frame& f = stack.back();
        const VertexId u = f.v;
        auto succ = game.successors(u);
        if (f.next == succ.size()) {
            on_stack[u] = false;
            stack.pop_back();
            continue;
        }
        const VertexId w = succ[f.next++];
        if (discovered[w] == kUnseen) {
            ++m.tree_edges;
            push(w);
        } else if (on_stack[w]) {
            ++m.back_edges;
        } else if (discovered[w] > discovered[u]) {
            ++m.forward_edges;
        } else {
            ++m.cross_edges;
        }
    }
    return m;
}

std::size_t diameter(const ParityGame& game, const Deadline& deadline)
{
    const std::size_t n = game.num_vertices();
    BfsScratch bfs(n);
    DeadlinePoller poll(deadline);
    std::size_t best = 0;
    for (VertexId s = 0; s < n; ++s) {
        bfs.reset();
        bfs.visit(s, 0);
        auto& q = bfs.queue();
        for (std::size_t head = 0; head < q.size(); ++head) {
            poll.tick();
            const VertexId u = q[head];
            const std::uint32_t du = bfs.dist(u);
            best = std::max<std::size_t>(best, du);
            for (VertexId w : game.successors(u)) {
                if (!bfs.seen(w)) bfs.visit(w, du + 1);
            }
        }
    }
    return best;
}

std::optional<std::size_t> girth(const ParityGame& game, const Deadline& deadline)
{
    const std::size_t n = game.num_vertices();
    for (VertexId v = 0; v < n; ++v) {
        if (game.has_edge(v, v)) return 1;
    }
    BfsScratch bfs(n);
    DeadlinePoller poll(deadline);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (VertexId s = 0; s < n; ++s) {
        bfs.reset();
        bfs.visit(s, 0);
        auto& q = bfs.queue();
        for (std::size_t head = 0; head < q.size(); ++head) {
            poll.tick();
            const VertexId u = q[head];
            const std::uint32_t du = bfs.dist(u);
            // every cycle closed from here on has length >= du + 1
            if (du + 1 >= best) break;
            bool closed = false;
            for (VertexId w : game.successors(u)) {
                if (w == s) {
                    best = du + 1;
                    closed = true;
                    break;
                }
                if (!bfs.seen(w)) bfs.visit(w, du + 1);
            }
            if (closed) break;
        }
        if (best == 2) break;
    }
    if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
    return best;
}

DiamondCounts count_diamonds(const ParityGame& game, const Deadline& deadline)
{
    const std::size_t n = game.num_vertices();
    // per w: number of successors v of u with v -> w, split by owner of v
    std::vector<std::uint32_t> all(n, 0);
    std::vector<std::uint32_t> even(n, 0);
    std::vector<std::uint32_t> odd(n, 0);
    std::vector<VertexId> touched;
    DeadlinePoller poll(deadline);
    DiamondCounts c;

    auto pairs = [](std::uint64_t k) { return k * (k - 1) / 2; };

    for (VertexId u = 0; u < n; ++u) {
        const Player pu = game.owner(u);
        for (VertexId v : game.successors(u)) {
            const Player pv = game.owner(v);
            for (VertexId w : game.successors(v)) {
                poll.tick();
                if (all[w] == 0) touched.push_back(w);
                ++all[w];
                if (pv == Player::Even) {
                    ++even[w];
                } else {
                    ++odd[w];
                }
            }
        }
        for (VertexId w : touched) {
            c.total += pairs(all[w]);
            if (pu == Player::Even) c.even += pairs(even[w]);
            if (pu == Player::Odd) c.odd += pairs(odd[w]);
            all[w] = even[w] = odd[w] = 0;
        }
        touched.clear();
    }
    return c;
}

NeighbourhoodSummary neighbourhood_summary(const ParityGame& game, std::uint32_t k, const Deadline& deadline)
{
    if (k == 0) throw std::invalid_argument("neighbourhood radius k must be positive");
    const std::size_t n = game.num_vertices();
    BfsScratch bfs(n);
    DeadlinePoller poll(deadline);
    NeighbourhoodSummary s;
    s.k = k;
    if (n == 0) return s;

    MinMaxAccumulator sizes;
    double min_c = std::numeric_limits<double>::infinity();
    double max_c = 0.0;
    double sum_c = 0.0;

    for (VertexId v = 0; v < n; ++v) {
        bfs.reset();
        bfs.visit(v, 0);
        auto& q = bfs.queue();
        for (std::size_t head = 0; head < q.size(); ++head) {
            poll.tick();
            const VertexId u = q[head];
            const std::uint32_t du = bfs.dist(u);
            if (du == k) continue;
            for (VertexId w : game.successors(u)) {
                if (!bfs.seen(w)) bfs.visit(w, du + 1);
            }
        }
        // q[0] is v itself; the neighbourhood is the rest of the queue
        const std::size_t size = q.size() - 1;
        std::size_t induced = 0;
        for (std::size_t i = 1; i < q.size(); ++i) {
            for (VertexId w : game.successors(q[i])) {
                poll.tick();
                if (w != v && bfs.seen(w)) ++induced;
            }
        }
        const double coefficient = size == 0 ? 0.0 : static_cast<double>(induced) / static_cast<double>(size);
        sizes.add(size);
        min_c = std::min(min_c, coefficient);
        max_c = std::max(max_c, coefficient);
        sum_c += coefficient;
    }

    const MinMaxAvg r = sizes.result();
    s.min_size = r.min;
    s.max_size = r.max;
    s.avg_size = r.avg;
    s.min_clustering = min_c;
    s.max_clustering = max_c;
    s.avg_clustering = sum_c / static_cast<double>(n);
    return s;
}

}  // namespace pgsuite
