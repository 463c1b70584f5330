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


#ifndef PGSUITE_GENERATORS_HPP
#define PGSUITE_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pgsuite/game.hpp"

namespace pgsuite {

enum class Family { Random, Clique, Ladder, RecursiveLadder, ModelCheckerLadder, Jurdzinski };

const char* to_string(Family f);
std::optional<Family> family_from_string(std::string_view name);

/**
 * Everything needed to regenerate a game bit for bit. Which fields matter
 * depends on the family:
 *
 *   random               n, min_out, max_out, max_prio, seed
 *   clique               n, self_loops
 *   ladder, recursive_ladder, mc_ladder   n
 *   jurdzinski           n (layers), m (blocks)
 */
struct GeneratorSpec
{
    Family family = Family::Random;
    std::uint32_t n = 1;
    std::uint32_t m = 1;
    std::uint32_t min_out = 1;
    std::uint32_t max_out = 1;
    Priority max_prio = 0;
    std::uint64_t seed = 0;
    bool self_loops = false;

    bool operator==(const GeneratorSpec&) const = default;
};

/// Canonical one-line form, e.g. "random n=100 min_out=2 max_out=4 max_prio=7 seed=42".
std::string to_string(const GeneratorSpec& spec);

/// Parses the canonical form (keys in any order, missing keys take their
/// defaults); throws std::invalid_argument on malformed input or bad ranges.
GeneratorSpec parse_generator_spec(std::string_view line);

/// Throws std::invalid_argument naming the violated range.
void check(const GeneratorSpec& spec);

ParityGame generate(const GeneratorSpec& spec);

/**
 * Uniform random game. Vertices are drawn in id order; for each vertex the
 * stream yields owner, priority, out-degree, then the successors (Floyd's
 * sampling without replacement). The engine is std::mt19937_64 seeded with
 * `seed`; bounded draws use rejection sampling so that the output does not
 * depend on the standard library's distributions.
 */
ParityGame gen_random(std::uint32_t n, std::uint32_t min_out, std::uint32_t max_out, Priority max_prio,
                      std::uint64_t seed);

/// Complete digraph on n vertices; priority(i) = i, Even owns even ids.
ParityGame gen_clique(std::uint32_t n, bool self_loops = false);

ParityGame gen_ladder(std::uint32_t n);
ParityGame gen_recursive_ladder(std::uint32_t n);
ParityGame gen_mc_ladder(std::uint32_t n);
ParityGame gen_jurdzinski(std::uint32_t layers, std::uint32_t blocks);

}  // namespace pgsuite

#endif
