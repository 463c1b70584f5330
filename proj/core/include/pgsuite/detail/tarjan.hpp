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


#ifndef PGSUITE_DETAIL_TARJAN_HPP
#define PGSUITE_DETAIL_TARJAN_HPP

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace pgsuite::detail {

/**
 * Iterative Tarjan over vertices 0..n-1. succ(v) must return a range of
 * vertex ids. Writes the component id of every vertex into component_of and
 * returns the number of components. Components are numbered in the order
 * Tarjan completes them, which is a reverse topological order of the
 * condensation: every edge u->w between components has
 * component_of[u] > component_of[w].
 */
template <class Successors>
std::uint32_t tarjan_scc(std::size_t n, Successors&& succ, std::vector<std::uint32_t>& component_of)
{
    constexpr std::uint32_t unvisited = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> index(n, unvisited);
    std::vector<std::uint32_t> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::uint32_t> stack;
    component_of.assign(n, unvisited);

    struct Frame
    {
        std::uint32_t v;
        std::size_t next;
    };
    std::vector<Frame> call;
    std::uint32_t counter = 0;
    std::uint32_t components = 0;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call.empty()) {
            Frame& f = call.back();
            const std::uint32_t v = f.v;
            const auto& out = succ(v);
            auto it = std::begin(out);
            const auto end = std::end(out);
            std::advance(it, f.next);
            bool descended = false;
            for (; it != end; ++it) {
                const std::uint32_t w = *it;
                ++f.next;
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w] && index[w] < low[v]) low[v] = index[w];
            }
            if (descended) continue;

            if (low[v] == index[v]) {
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component_of[w] = components;
                } while (w != v);
                ++components;
            }
            call.pop_back();
            if (!call.empty()) {
                const std::uint32_t parent = call.back().v;
                if (low[v] < low[parent]) low[parent] = low[v];
            }
        }
    }
    return components;
}

}  // namespace pgsuite::detail

#endif
