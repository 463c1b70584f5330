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


#ifndef PGSUITE_GAME_HPP
#define PGSUITE_GAME_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pgsuite {

using VertexId = std::uint32_t;
using Priority = std::uint32_t;

/// The two players. On disk Even is 0 and Odd is 1.
enum class Player : std::uint8_t { Even = 0, Odd = 1 };

constexpr Player opponent(Player p) { return p == Player::Even ? Player::Odd : Player::Even; }

/// Player favoured by a priority under the max-parity condition.
constexpr Player player_of_priority(Priority p) { return (p & 1U) ? Player::Odd : Player::Even; }

const char* to_string(Player p);

struct VertexInfo
{
    Player owner = Player::Even;
    Priority priority = 0;
    std::optional<std::string> label;

    bool operator==(const VertexInfo&) const = default;
};

/**
 * Compressed sparse row adjacency: the neighbours of v are
 * targets[offsets[v] .. offsets[v+1]).
 */
class Adjacency
{
public:
    Adjacency() : offsets_(1, 0) {}
    explicit Adjacency(const std::vector<std::vector<VertexId>>& lists);
    Adjacency(std::vector<std::size_t> offsets, std::vector<VertexId> targets);

    [[nodiscard]] std::size_t num_vertices() const { return offsets_.size() - 1; }
    [[nodiscard]] std::size_t num_edges() const { return targets_.size(); }

    [[nodiscard]] std::span<const VertexId> operator[](VertexId v) const
    {
        return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }

    [[nodiscard]] std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    /// Edge-reversed copy; neighbour lists come out in ascending order.
    [[nodiscard]] Adjacency reversed() const;

    bool operator==(const Adjacency&) const = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> targets_;
};

/**
 * A parity game arena (V_even, V_odd, E, priority).
 *
 * Immutable after construction and safe to share between threads. The
 * constructor does not enforce the arena invariants (totality, edge targets in
 * range, no duplicate successors); use validate() for that. Successor lists
 * are stored in ascending order.
 */
class ParityGame
{
public:
    ParityGame() = default;
    ParityGame(std::vector<VertexInfo> vertices,
               std::vector<std::vector<VertexId>> successors,
               std::optional<VertexId> initial_vertex = std::nullopt);

    [[nodiscard]] std::size_t num_vertices() const { return vertices_.size(); }
    [[nodiscard]] std::size_t num_edges() const { return successors_.num_edges(); }
    [[nodiscard]] bool empty() const { return vertices_.empty(); }

    [[nodiscard]] const VertexInfo& vertex(VertexId v) const { return vertices_[v]; }
    [[nodiscard]] const std::vector<VertexInfo>& vertices() const { return vertices_; }
    [[nodiscard]] Player owner(VertexId v) const { return vertices_[v].owner; }
    [[nodiscard]] Priority priority(VertexId v) const { return vertices_[v].priority; }

    [[nodiscard]] std::span<const VertexId> successors(VertexId v) const { return successors_[v]; }
    [[nodiscard]] const Adjacency& successor_index() const { return successors_; }

    /// Builds the predecessor index. Not cached: the game stays immutable.
    [[nodiscard]] Adjacency predecessors() const { return successors_.reversed(); }

    [[nodiscard]] bool has_edge(VertexId from, VertexId to) const;

    /// The start vertex named by the input, or vertex 0 by convention.
    [[nodiscard]] std::optional<VertexId> initial_vertex() const;
    [[nodiscard]] bool has_explicit_initial_vertex() const { return initial_.has_value(); }

    bool operator==(const ParityGame&) const = default;

private:
    std::vector<VertexInfo> vertices_;
    Adjacency successors_;
    std::optional<VertexId> initial_;
};

/// Disjoint winning regions; each list is sorted ascending.
struct WinningPartition
{
    std::vector<VertexId> won_even;
    std::vector<VertexId> won_odd;

    [[nodiscard]] const std::vector<VertexId>& won_by(Player p) const
    {
        return p == Player::Even ? won_even : won_odd;
    }
    [[nodiscard]] Player winner(VertexId v) const;

    bool operator==(const WinningPartition&) const = default;
};

}  // namespace pgsuite

#endif
