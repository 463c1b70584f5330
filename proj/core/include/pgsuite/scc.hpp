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


#ifndef PGSUITE_SCC_HPP
#define PGSUITE_SCC_HPP

#include <cstdint>
#include <vector>

#include "pgsuite/game.hpp"

namespace pgsuite {

using ComponentId = std::uint32_t;

/**
 * Strongly connected components and their quotient DAG.
 *
 * Components are numbered in topological order of the quotient graph: every
 * quotient edge c -> d has c < d. Vertex lists are sorted ascending.
 */
struct SccDecomposition
{
    std::vector<ComponentId> component_of;
    std::vector<std::vector<VertexId>> components;
    std::vector<std::vector<ComponentId>> quotient_successors;  // deduplicated, ascending, no self-edges
    std::vector<bool> trivial;   // singleton without a self-loop
    std::vector<bool> terminal;  // no quotient successors

    [[nodiscard]] std::size_t num_components() const { return components.size(); }
};

SccDecomposition scc_decompose(const ParityGame& game);

struct SccMetrics
{
    std::size_t num_sccs = 0;
    std::size_t num_trivial = 0;
    std::size_t num_terminal = 0;
    std::size_t quotient_height = 0;  // edges on the longest quotient path

    bool operator==(const SccMetrics&) const = default;
};

SccMetrics scc_metrics(const SccDecomposition& decomposition);

}  // namespace pgsuite

#endif
