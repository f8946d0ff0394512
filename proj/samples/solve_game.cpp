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


// Solves one random mean-payoff arena with every solver and prints the winning regions.

#include "cyclepat/cyclepat.hpp"

#include <iostream>

using namespace cyclepat;

namespace {

void show(const char *name, const Arena &a, const Partition &p)
{
    std::cout << name << ":";
    for (VertexIndex v = 0; v < a.num_vertices(); ++v)
        if (p.v_plus[v]) std::cout << " " << a.graph.vertex_id(v);
    std::cout << "\n";
}

} // namespace

int main(int argc, char **argv)
{
    Rng rng(argc > 1 ? std::stoul(argv[1]) : 8);
    RandomGraphOptions opt;
    opt.n = 5;
    opt.extra_edges = 4;
    auto a = random_arena(rng, opt);
    auto w = random_weights(rng, a.graph, -4, 4);
    for (VertexIndex v = 0; v < a.num_vertices(); ++v)
        std::cout << a.graph.vertex_id(v) << " owned by " << player_name(a.owner[v]) << "\n";
    for (EdgeIndex e = 0; e < a.num_edges(); ++e)
        std::cout << a.graph.edge_id(e) << ": " << a.graph.vertex_id(a.graph.src(e)) << " -> "
                  << a.graph.vertex_id(a.graph.dst(e)) << "  w = " << to_string(w[e]) << "\n";

    auto pat = CyclePattern::weight_induced(a.graph, w);
    show("oracle", a, solve_oracle(a, w));
    show("gkk", a, solve_gkk(a, w));
    show("value iteration", a, solve_energy(a, w).second);
    auto p = solve_pattern_only(a, pat);
    show("signs only", a, p);
    std::cout << "certificate " << (verify_partition(a, pat, p) ? "accepted" : "rejected") << "\n";
    return 0;
}
