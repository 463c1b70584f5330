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


#include "pgsuite/scc.hpp"

#include <algorithm>

#include "pgsuite/detail/tarjan.hpp"

namespace pgsuite {

SccDecomposition scc_decompose(const ParityGame& game)
{
    const std::size_t n = game.num_vertices();
    SccDecomposition d;
    std::vector<std::uint32_t> reverse_topo;
    const std::uint32_t count =
        detail::tarjan_scc(n, [&](VertexId v) { return game.successors(v); }, reverse_topo);

    // Tarjan numbers sinks first; flip so quotient edges point to larger ids.
    d.component_of.resize(n);
    for (VertexId v = 0; v < n; ++v) d.component_of[v] = count - 1 - reverse_topo[v];

    d.components.resize(count);
    for (VertexId v = 0; v < n; ++v) d.components[d.component_of[v]].push_back(v);

    d.quotient_successors.resize(count);
    d.trivial.assign(count, false);
    d.terminal.assign(count, false);
    for (ComponentId c = 0; c < count; ++c) {
        auto& q = d.quotient_successors[c];
        bool self_edge = false;
        for (VertexId u : d.components[c]) {
            for (VertexId w : game.successors(u)) {
                const ComponentId cw = d.component_of[w];
                if (cw == c) {
                    self_edge = true;
                } else {
                    q.push_back(cw);
                }
            }
        }
        std::sort(q.begin(), q.end());
        q.erase(std::unique(q.begin(), q.end()), q.end());
        d.trivial[c] = d.components[c].size() == 1 && !self_edge;
        d.terminal[c] = q.empty();
    }
    return d;
}

SccMetrics scc_metrics(const SccDecomposition& d)
{
    SccMetrics m;
    const std::size_t count = d.num_components();
    m.num_sccs = count;
    m.num_trivial = static_cast<std::size_t>(std::count(d.trivial.begin(), d.trivial.end(), true));
    m.num_terminal = static_cast<std::size_t>(std::count(d.terminal.begin(), d.terminal.end(), true));

    // longest path: components are topologically ordered, so sweep backwards
    std::vector<std::size_t> height(count, 0);
    for (std::size_t c = count; c-- > 0;) {
        for (ComponentId s : d.quotient_successors[c]) height[c] = std::max(height[c], height[s] + 1);
        m.quotient_height = std::max(m.quotient_height, height[c]);
    }
    return m;
}

}  // namespace pgsuite
