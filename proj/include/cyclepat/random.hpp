/*
 * Copyright 2026 The cyclepat Authors
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

#pragma once

#include "cyclepat/graph.hpp"
#include "cyclepat/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace cyclepat {

using Rng = std::mt19937_64;

inline int uniform_int(Rng &rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

struct RandomGraphOptions {
    std::size_t n = 4;
    std::size_t extra_edges = 3;
    bool loops = true;
    bool parallel = true;
};

/// Strongly connected multigraph: a random Hamiltonian cycle plus extra random edges.
inline Digraph random_strongly_connected(Rng &rng, const RandomGraphOptions &opt)
{
    Digraph g;
    for (std::size_t v = 0; v < opt.n; ++v) g.add_vertex("v" + std::to_string(v));
    std::vector<VertexIndex> perm(opt.n);
    std::iota(perm.begin(), perm.end(), VertexIndex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::size_t next_id = 0;
    auto add = [&](VertexIndex s, VertexIndex t) { g.add_edge("e" + std::to_string(next_id++), s, t); };
    std::vector<std::pair<VertexIndex, VertexIndex>> used;
    auto has = [&](VertexIndex s, VertexIndex t) {
        return std::find(used.begin(), used.end(), std::make_pair(s, t)) != used.end();
    };
    for (std::size_t i = 0; i < opt.n; ++i) {
        VertexIndex s = perm[i], t = perm[(i + 1) % opt.n];
        add(s, t);
        used.emplace_back(s, t);
    }
    std::size_t attempts = 0;
    std::size_t added = 0;
    while (added < opt.extra_edges && attempts < 100 * (opt.extra_edges + 1)) {
        ++attempts;
        auto s = static_cast<VertexIndex>(uniform_int(rng, 0, static_cast<int>(opt.n) - 1));
        auto t = static_cast<VertexIndex>(uniform_int(rng, 0, static_cast<int>(opt.n) - 1));
        if (s == t && !opt.loops) continue;
        if (!opt.parallel && has(s, t)) continue;
        add(s, t);
        used.emplace_back(s, t);
        ++added;
    }
    return g;
}

/// Arbitrary digraph with n vertices and m random edges.
inline Digraph random_digraph(Rng &rng, std::size_t n, std::size_t m, bool loops = true)
{
    Digraph g;
    for (std::size_t v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
    std::size_t id = 0;
    while (g.num_edges() < m) {
        auto s = static_cast<VertexIndex>(uniform_int(rng, 0, static_cast<int>(n) - 1));
        auto t = static_cast<VertexIndex>(uniform_int(rng, 0, static_cast<int>(n) - 1));
        if (s == t && !loops) continue;
        g.add_edge("e" + std::to_string(id++), s, t);
    }
    return g;
}

inline std::vector<Player> random_owners(Rng &rng, std::size_t n)
{
    std::vector<Player> owner(n);
    for (auto &o : owner) o = uniform_int(rng, 0, 1) ? Player::Max : Player::Min;
    return owner;
}

inline Arena random_arena(Rng &rng, const RandomGraphOptions &opt)
{
    Digraph g = random_strongly_connected(rng, opt);
    auto owner = random_owners(rng, g.num_vertices());
    return Arena(std::move(g), std::move(owner));
}

inline WeightFn random_weights(Rng &rng, const Digraph &g, int lo, int hi)
{
    std::vector<Rational> w(g.num_edges());
    for (auto &x : w) x = uniform_int(rng, lo, hi);
    return WeightFn(std::move(w));
}

inline PriorityFn random_priorities(Rng &rng, const Digraph &g, int max_priority)
{
    std::vector<unsigned> p(g.num_edges());
    for (auto &x : p) x = static_cast<unsigned>(uniform_int(rng, 0, max_priority));
    return PriorityFn(std::move(p));
}

} // namespace cyclepat
