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


#include "pgsuite/solve.hpp"

#include <algorithm>
#include <iterator>
#include <utility>

namespace pgsuite {

namespace {

using VertexSet = std::vector<VertexId>;  // sorted ascending

VertexSet set_minus(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    out.reserve(a.size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Attractor computations restricted to a subgame, sharing scratch space.
class SubgameAttractor
{
public:
    explicit SubgameAttractor(const ParityGame& game)
        : game_(game), pred_(game.predecessors()), in_sub_(game.num_vertices(), 0),
          in_attr_(game.num_vertices(), 0), remaining_(game.num_vertices(), -1)
    {
    }

    VertexSet operator()(const VertexSet& subgame, Player player, const VertexSet& target, DeadlinePoller& poll)
    {
        for (VertexId v : subgame) in_sub_[v] = 1;
        VertexSet attr;
        attr.reserve(subgame.size());
        for (VertexId v : target) {
            in_attr_[v] = 1;
            attr.push_back(v);
        }
        std::vector<VertexId> touched;
        for (std::size_t head = 0; head < attr.size(); ++head) {
            const VertexId u = attr[head];
            for (VertexId p : pred_[u]) {
                poll.tick();
                if (!in_sub_[p] || in_attr_[p]) continue;
                bool take = game_.owner(p) == player;
                if (!take) {
                    if (remaining_[p] < 0) {
                        remaining_[p] = 0;
                        for (VertexId w : game_.successors(p)) remaining_[p] += in_sub_[w];
                        touched.push_back(p);
                    }
                    take = --remaining_[p] == 0;
                }
                if (take) {
                    in_attr_[p] = 1;
                    attr.push_back(p);
                }
            }
        }
        for (VertexId v : subgame) in_sub_[v] = 0;
        for (VertexId v : attr) in_attr_[v] = 0;
        for (VertexId v : touched) remaining_[v] = -1;
        std::sort(attr.begin(), attr.end());
        return attr;
    }

private:
    const ParityGame& game_;
    Adjacency pred_;
    std::vector<std::uint8_t> in_sub_;
    std::vector<std::uint8_t> in_attr_;
    std::vector<std::int64_t> remaining_;
};

struct Frame
{
    VertexSet game;
    int stage = 0;
    Player alpha = Player::Even;
    VertexSet removed;  // the attractor taken out before the pending child call
};

struct Result
{
    VertexSet won[2];
};

}  // namespace

std::vector<VertexId> attractor(const ParityGame& game, Player player, std::span<const VertexId> target)
{
    VertexSet all(game.num_vertices());
    for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
    VertexSet t(target.begin(), target.end());
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    SubgameAttractor attr(game);
    Deadline never;
    DeadlinePoller poll(never);
    return attr(all, player, t, poll);
}

WinningPartition solve_zielonka(const ParityGame& game, const SolveOptions& options)
{
    SubgameAttractor attr(game);
    DeadlinePoller poll(options.deadline);

    std::vector<Frame> stack;
    std::vector<Result> results;

    auto push = [&](VertexSet g) {
        if (options.max_depth != 0 && stack.size() >= options.max_depth) {
            throw SolveError("recursion depth budget of " + std::to_string(options.max_depth) + " exceeded");
        }
        Frame f;
        f.game = std::move(g);
        stack.push_back(std::move(f));
    };

    VertexSet all(game.num_vertices());
    for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
    push(std::move(all));

    while (!stack.empty()) {
        poll.check_now();
        Frame& f = stack.back();
        if (f.stage == 0) {
            if (f.game.empty()) {
                results.emplace_back();
                stack.pop_back();
                continue;
            }
            Priority top = 0;
            for (VertexId v : f.game) top = std::max(top, game.priority(v));
            f.alpha = player_of_priority(top);
            VertexSet highest;
            for (VertexId v : f.game) {
                if (game.priority(v) == top) highest.push_back(v);
            }
            f.removed = attr(f.game, f.alpha, highest, poll);
            f.stage = 1;
            VertexSet rest = set_minus(f.game, f.removed);
            push(std::move(rest));  // may reallocate: f is not used after this
            continue;
        }

        const auto a = static_cast<int>(f.alpha);
        const int b = 1 - a;
        Result child = std::move(results.back());
        results.pop_back();

        if (f.stage == 1) {
            if (child.won[b].empty()) {
                Result r;
                r.won[a] = std::move(f.game);
                stack.pop_back();
                results.push_back(std::move(r));
                continue;
            }
            f.removed = attr(f.game, opponent(f.alpha), child.won[b], poll);
            f.stage = 2;
            VertexSet rest = set_minus(f.game, f.removed);
            push(std::move(rest));
            continue;
        }

        Result r;
        r.won[a] = std::move(child.won[a]);
        r.won[b] = set_union(child.won[b], f.removed);
        stack.pop_back();
        results.push_back(std::move(r));
    }

    WinningPartition w;
    w.won_even = std::move(results.back().won[0]);
    w.won_odd = std::move(results.back().won[1]);
    return w;
}

}  // namespace pgsuite
