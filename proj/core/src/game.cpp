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


#include "pgsuite/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgsuite {

const char* to_string(Player p)
{
    return p == Player::Even ? "even" : "odd";
}

Adjacency::Adjacency(const std::vector<std::vector<VertexId>>& lists)
{
    offsets_.reserve(lists.size() + 1);
    offsets_.push_back(0);
    std::size_t total = 0;
    for (const auto& l : lists) total += l.size();
    targets_.reserve(total);
    for (const auto& l : lists) {
        targets_.insert(targets_.end(), l.begin(), l.end());
        offsets_.push_back(targets_.size());
    }
}

Adjacency::Adjacency(std::vector<std::size_t> offsets, std::vector<VertexId> targets)
    : offsets_(std::move(offsets)), targets_(std::move(targets))
{
    if (offsets_.empty() || offsets_.back() != targets_.size()) {
        throw std::invalid_argument("Adjacency: offsets do not match targets");
    }
}

Adjacency Adjacency::reversed() const
{
    const std::size_t n = num_vertices();
    std::vector<std::size_t> offsets(n + 1, 0);
    for (VertexId t : targets_) {
        if (t < n) ++offsets[t + 1];
    }
    for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];

    std::vector<VertexId> targets(offsets[n]);
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    // iterating sources in ascending order leaves every predecessor list sorted
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId t : (*this)[u]) {
            if (t < n) targets[fill[t]++] = u;
        }
    }
    return Adjacency(std::move(offsets), std::move(targets));
}

ParityGame::ParityGame(std::vector<VertexInfo> vertices,
                       std::vector<std::vector<VertexId>> successors,
                       std::optional<VertexId> initial_vertex)
    : vertices_(std::move(vertices)), initial_(initial_vertex)
{
    if (successors.size() != vertices_.size()) {
        throw std::invalid_argument("ParityGame: successor lists do not match vertex count");
    }
    for (auto& l : successors) std::sort(l.begin(), l.end());
    successors_ = Adjacency(successors);
}

bool ParityGame::has_edge(VertexId from, VertexId to) const
{
    auto s = successors(from);
    return std::binary_search(s.begin(), s.end(), to);
}

std::optional<VertexId> ParityGame::initial_vertex() const
{
    if (initial_) return initial_;
    if (vertices_.empty()) return std::nullopt;
    return VertexId{0};
}

Player WinningPartition::winner(VertexId v) const
{
    if (std::binary_search(won_even.begin(), won_even.end(), v)) return Player::Even;
    if (std::binary_search(won_odd.begin(), won_odd.end(), v)) return Player::Odd;
    throw std::out_of_range("WinningPartition: vertex not covered");
}

}  // namespace pgsuite
