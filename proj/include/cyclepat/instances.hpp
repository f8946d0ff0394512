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

#include "cyclepat/pattern.hpp"

namespace cyclepat::instances {

/// Four vertices, six edges, four cycles.
inline Digraph four_cycle_graph()
{
    Digraph g;
    for (auto v : {"v1", "v2", "v3", "v4"}) g.add_vertex(v);
    g.add_edge("f1", "v1", "v4");
    g.add_edge("f2", "v4", "v1");
    g.add_edge("f3", "v1", "v3");
    g.add_edge("f4", "v3", "v4");
    g.add_edge("f5", "v4", "v2");
    g.add_edge("f6", "v2", "v1");
    return g;
}

/// {f1,f2} and {f3,f4,f5,f6} positive; {f1,f5,f6} and {f2,f3,f4} negative.
inline CyclePattern four_cycle_pattern()
{
    return CyclePattern::table(four_cycle_graph(), {
                                                       {{"f1", "f2"}, Sign::Plus},
                                                       {{"f3", "f4", "f5", "f6"}, Sign::Plus},
                                                       {{"f1", "f5", "f6"}, Sign::Minus},
                                                       {{"f2", "f3", "f4"}, Sign::Minus},
                                                   });
}

/// Complete digraph on v1..v4 without loops; edge "eij" goes from vi to vj.
inline Digraph complete_digraph(int n = 4)
{
    Digraph g;
    for (int i = 1; i <= n; ++i) g.add_vertex("v" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) g.add_edge("e" + std::to_string(i) + std::to_string(j), "v" + std::to_string(i), "v" + std::to_string(j));
    return g;
}

/// Weight 3 on both directions of {v1,v4} and {v2,v3}, -2 elsewhere.
/// Every edge then lies on a positive and on a negative cycle, and no cycle has weight 0.
inline WeightFn k4_mixed_weights(const Digraph &k4)
{
    std::vector<Rational> w(k4.num_edges(), -2);
    for (auto id : {"e14", "e41", "e23", "e32"}) w[k4.edge(id)] = 3;
    return WeightFn(std::move(w));
}

/// a (Max) -> b, c; b (Min) -> a, c; c has a loop. Not strongly connected.
inline Arena escape_arena(const Rational &loop_weight, WeightFn *weights = nullptr)
{
    Digraph g;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_vertex("c");
    g.add_edge("ab", "a", "b");
    g.add_edge("ac", "a", "c");
    g.add_edge("ba", "b", "a");
    g.add_edge("bc", "b", "c");
    g.add_edge("cc", "c", "c");
    if (weights) *weights = WeightFn(std::vector<Rational>{1, 0, 1, 0, loop_weight});
    return Arena(std::move(g), {Player::Max, Player::Min, Player::Max});
}

/// Directed n-cycle v0 -> v1 -> ... -> v0 with edges e0..e{n-1}.
inline Digraph directed_cycle(std::size_t n)
{
    Digraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) g.add_edge("e" + std::to_string(i), i, (i + 1) % n);
    return g;
}

/// One vertex with the given number of loops l1, l2, ...
inline Digraph loops(std::size_t count, const std::string &vertex = "v")
{
    Digraph g;
    g.add_vertex(vertex);
    for (std::size_t i = 1; i <= count; ++i) g.add_edge("l" + std::to_string(i), 0, 0);
    return g;
}

} // namespace cyclepat::instances
