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


#ifndef PGSUITE_SOLVE_HPP
#define PGSUITE_SOLVE_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "pgsuite/deadline.hpp"
#include "pgsuite/game.hpp"

namespace pgsuite {

/**
 * Least superset of target closed under: a vertex of `player` with some
 * successor inside, or an opponent vertex with all successors inside.
 * Returns the set sorted ascending.
 */
std::vector<VertexId> attractor(const ParityGame& game, Player player, std::span<const VertexId> target);

class SolveError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct SolveOptions
{
    /// Maximum nesting of recursive calls; 0 means unbounded.
    std::size_t max_depth = 0;
    Deadline deadline;
};

/**
 * Zielonka's recursive algorithm (max-parity), run on an explicit stack so
 * deep recursions do not overflow the call stack. Throws SolveError when
 * max_depth is exceeded and Timeout when the deadline passes.
 */
WinningPartition solve_zielonka(const ParityGame& game, const SolveOptions& options = {});

}  // namespace pgsuite

#endif
