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


#include "pgsuite/generators.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pgsuite {

namespace {

/// Portable bounded draw in [0, bound) by rejection; bound > 0.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x >= threshold) return x % bound;
    }
}

struct Builder
{
    explicit Builder(std::size_t n) : vertices(n), successors(n) {}

    void set(VertexId v, Player owner, Priority prio, std::vector<VertexId> succ)
    {
        vertices[v].owner = owner;
        vertices[v].priority = prio;
        std::sort(succ.begin(), succ.end());
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
        successors[v] = std::move(succ);
    }

    ParityGame build() { return ParityGame(std::move(vertices), std::move(successors)); }

    std::vector<VertexInfo> vertices;
    std::vector<std::vector<VertexId>> successors;
};

void require(bool ok, const std::string& message)
{
    if (!ok) throw std::invalid_argument(message);
}

}  // namespace

const char* to_string(Family f)
{
    switch (f) {
    case Family::Random: return "random";
    case Family::Clique: return "clique";
    case Family::Ladder: return "ladder";
    case Family::RecursiveLadder: return "recursive_ladder";
    case Family::ModelCheckerLadder: return "mc_ladder";
    case Family::Jurdzinski: return "jurdzinski";
    }
    return "unknown";
}

std::optional<Family> family_from_string(std::string_view name)
{
    for (Family f : {Family::Random, Family::Clique, Family::Ladder, Family::RecursiveLadder,
                     Family::ModelCheckerLadder, Family::Jurdzinski}) {
        if (name == to_string(f)) return f;
    }
    return std::nullopt;
}

std::string to_string(const GeneratorSpec& spec)
{
    std::ostringstream out;
    out << to_string(spec.family);
    switch (spec.family) {
    case Family::Random:
        out << " n=" << spec.n << " min_out=" << spec.min_out << " max_out=" << spec.max_out
            << " max_prio=" << spec.max_prio << " seed=" << spec.seed;
        break;
    case Family::Clique:
        out << " n=" << spec.n;
        if (spec.self_loops) out << " self_loops=1";
        break;
    case Family::Jurdzinski: out << " n=" << spec.n << " m=" << spec.m; break;
    default: out << " n=" << spec.n; break;
    }
    return out.str();
}

GeneratorSpec parse_generator_spec(std::string_view line)
{
    std::istringstream in{std::string(line)};
    std::string word;
    require(static_cast<bool>(in >> word), "empty generator spec");
    auto family = family_from_string(word);
    require(family.has_value(), "unknown generator family '" + word + "'");

    GeneratorSpec spec;
    spec.family = *family;
    while (in >> word) {
        auto eq = word.find('=');
        require(eq != std::string::npos, "expected key=value, got '" + word + "'");
        const std::string key = word.substr(0, eq);
        const std::string text = word.substr(eq + 1);
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        require(ec == std::errc() && ptr == text.data() + text.size(),
                "invalid value for '" + key + "': '" + text + "'");
        auto narrow = [&](std::uint64_t v) {
            require(v <= 0xffffffffULL, "'" + key + "' out of range");
            return static_cast<std::uint32_t>(v);
        };
        if (key == "n") {
            spec.n = narrow(value);
        } else if (key == "m") {
            spec.m = narrow(value);
        } else if (key == "min_out") {
            spec.min_out = narrow(value);
        } else if (key == "max_out") {
            spec.max_out = narrow(value);
        } else if (key == "max_prio") {
            spec.max_prio = narrow(value);
        } else if (key == "seed") {
            spec.seed = value;
        } else if (key == "self_loops") {
            spec.self_loops = value != 0;
        } else {
            throw std::invalid_argument("unknown generator parameter '" + key + "'");
        }
    }
    check(spec);
    return spec;
}

void check(const GeneratorSpec& spec)
{
    require(spec.n >= 1, std::string(to_string(spec.family)) + ": n must be >= 1");
    switch (spec.family) {
    case Family::Random:
        require(spec.min_out >= 1, "random: min_out must be >= 1");
        require(spec.min_out <= spec.max_out, "random: min_out must be <= max_out");
        require(spec.max_out <= spec.n, "random: max_out must be <= n");
        break;
    case Family::Jurdzinski: require(spec.m >= 1, "jurdzinski: m must be >= 1"); break;
    default: break;
    }
}

ParityGame generate(const GeneratorSpec& spec)
{
    check(spec);
    switch (spec.family) {
    case Family::Random: return gen_random(spec.n, spec.min_out, spec.max_out, spec.max_prio, spec.seed);
    case Family::Clique: return gen_clique(spec.n, spec.self_loops);
    case Family::Ladder: return gen_ladder(spec.n);
    case Family::RecursiveLadder: return gen_recursive_ladder(spec.n);
    case Family::ModelCheckerLadder: return gen_mc_ladder(spec.n);
    case Family::Jurdzinski: return gen_jurdzinski(spec.n, spec.m);
    }
    throw std::invalid_argument("unknown generator family");
}

ParityGame gen_random(std::uint32_t n, std::uint32_t min_out, std::uint32_t max_out, Priority max_prio,
                      std::uint64_t seed)
{
    GeneratorSpec spec{Family::Random, n, 1, min_out, max_out, max_prio, seed, false};
    check(spec);

    std::mt19937_64 rng(seed);
    Builder b(n);
    std::vector<bool> chosen(n, false);
    std::vector<VertexId> succ;
    for (VertexId v = 0; v < n; ++v) {
        const Player owner = draw(rng, 2) == 0 ? Player::Even : Player::Odd;
        const auto prio = static_cast<Priority>(draw(rng, std::uint64_t{max_prio} + 1));
        const auto degree = static_cast<std::uint32_t>(min_out + draw(rng, max_out - min_out + 1));

        // Floyd: k distinct values from [0, n)
        succ.clear();
        for (std::uint32_t j = n - degree; j < n; ++j) {
            auto t = static_cast<VertexId>(draw(rng, std::uint64_t{j} + 1));
            if (chosen[t]) t = j;
            chosen[t] = true;
            succ.push_back(t);
        }
        for (VertexId t : succ) chosen[t] = false;
        b.set(v, owner, prio, succ);
    }
    return b.build();
}

ParityGame gen_clique(std::uint32_t n, bool self_loops)
{
    require(n >= 1, "clique: n must be >= 1");
    Builder b(n);
    for (VertexId i = 0; i < n; ++i) {
        std::vector<VertexId> succ;
        succ.reserve(n);
        for (VertexId j = 0; j < n; ++j) {
            if (i != j || self_loops || n == 1) succ.push_back(j);
        }
        b.set(i, i % 2 == 0 ? Player::Even : Player::Odd, i, std::move(succ));
    }
    return b.build();
}

ParityGame gen_ladder(std::uint32_t n)
{
    // layer i: 2i (Even, 0) and 2i+1 (Odd, 1), both pointing at both
    // vertices of layer (i + 1) mod n
    require(n >= 1, "ladder: n must be >= 1");
    Builder b(2 * std::size_t{n});
    for (VertexId i = 0; i < n; ++i) {
        const VertexId next = 2 * ((i + 1) % n);
        b.set(2 * i, Player::Even, 0, {next, next + 1});
        b.set(2 * i + 1, Player::Odd, 1, {next, next + 1});
    }
    return b.build();
}

ParityGame gen_recursive_ladder(std::uint32_t n)
{
    // block i: a = 3i (Even, 2i), b = 3i+1 (Odd, 2i+1), c = 3i+2 (Even, 2i+2)
    //   a -> b, c     b -> a, a'     c -> b, a''
    // where a' is the next block's a and a'' the previous block's a (cyclic)
    require(n >= 1, "recursive_ladder: n must be >= 1");
    Builder b(3 * std::size_t{n});
    for (VertexId i = 0; i < n; ++i) {
        const VertexId a = 3 * i;
        const VertexId next = 3 * ((i + 1) % n);
        const VertexId prev = 3 * ((i + n - 1) % n);
        b.set(a, Player::Even, 2 * i, {a + 1, a + 2});
        b.set(a + 1, Player::Odd, 2 * i + 1, {a, next});
        b.set(a + 2, Player::Even, 2 * i + 2, {a + 1, prev});
    }
    return b.build();
}

ParityGame gen_mc_ladder(std::uint32_t n)
{
    // ring of 2n positions with two vertices each; position p holds
    // 2p (Even, 2p+1) and 2p+1 (Odd, 2p), both pointing at both vertices of
    // the next position, so every cycle winds around the ring: girth 2n
    require(n >= 1, "mc_ladder: n must be >= 1");
    const std::uint32_t positions = 2 * n;
    Builder b(2 * std::size_t{positions});
    for (VertexId p = 0; p < positions; ++p) {
        const VertexId next = 2 * ((p + 1) % positions);
        b.set(2 * p, Player::Even, 2 * p + 1, {next, next + 1});
        b.set(2 * p + 1, Player::Odd, 2 * p, {next, next + 1});
    }
    return b.build();
}

ParityGame gen_jurdzinski(std::uint32_t layers, std::uint32_t blocks)
{
    // layer i has blocks (e_ij, o_ij) and a hub h_i, laid out consecutively:
    //   e_ij (Even, 2i)   -> o_ij, h_i
    //   o_ij (Odd, 2i+1)  -> e_i(j+1 mod m), h_i
    //   h_i  (Odd, 2n)    -> e_i0, e_(i+1 mod n)0
    require(layers >= 1, "jurdzinski: n must be >= 1");
    require(blocks >= 1, "jurdzinski: m must be >= 1");
    const std::size_t width = 2 * std::size_t{blocks} + 1;
    Builder b(layers * width);
    auto e = [&](std::uint32_t i, std::uint32_t j) { return static_cast<VertexId>(i * width + 2 * j); };
    for (std::uint32_t i = 0; i < layers; ++i) {
        const auto hub = static_cast<VertexId>(i * width + 2 * blocks);
        for (std::uint32_t j = 0; j < blocks; ++j) {
            b.set(e(i, j), Player::Even, 2 * i, {e(i, j) + 1, hub});
            b.set(e(i, j) + 1, Player::Odd, 2 * i + 1, {e(i, (j + 1) % blocks), hub});
        }
        b.set(hub, Player::Odd, 2 * layers, {e(i, 0), e((i + 1) % layers, 0)});
    }
    return b.build();
}

}  // namespace pgsuite
