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

#include "cyclepat/graph.hpp"
#include "cyclepat/instances.hpp"
#include "cyclepat/random.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace cyclepat;

namespace {

// Independent oracle: a nonempty edge subset is a simple cycle iff every touched
// vertex has in- and out-degree one and the subset is connected.
std::set<std::vector<std::string>> brute_force_cycles(const Digraph &g)
{
    const std::size_t m = g.num_edges();
    std::set<std::vector<std::string>> out;
    for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
        std::vector<int> in(g.num_vertices(), 0), outd(g.num_vertices(), 0);
        std::vector<EdgeIndex> es;
        for (std::size_t e = 0; e < m; ++e)
            if (mask >> e & 1) {
                ++outd[g.src(e)];
                ++in[g.dst(e)];
                es.push_back(e);
            }
        bool ok = true;
        for (std::size_t v = 0; v < g.num_vertices(); ++v)
            if (in[v] != outd[v] || in[v] > 1) ok = false;
        if (!ok) continue;
        // Walk from the first edge and count the edges reached.
        std::vector<EdgeIndex> next(g.num_vertices(), m);
        for (auto e : es) next[g.src(e)] = e;
        std::size_t steps = 0;
        VertexIndex v = g.src(es[0]);
        do {
            v = g.dst(next[v]);
            ++steps;
        } while (v != g.src(es[0]));
        if (steps != es.size()) continue;
        std::vector<std::string> key;
        for (auto e : es) key.push_back(g.edge_id(e));
        std::sort(key.begin(), key.end());
        out.insert(key);
    }
    return out;
}

std::vector<std::vector<std::string>> keys(const std::vector<Cycle> &cs)
{
    std::vector<std::vector<std::string>> k;
    for (auto &c : cs) k.push_back(c.key);
    return k;
}

} // namespace

TEST(Validate, SingleLoopIsStronglyConnected)
{
    EXPECT_NO_THROW(validate(instances::loops(1), true));
}

TEST(Validate, OneWayEdgeIsNotStronglyConnected)
{
    Digraph g;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_edge("ab", "a", "b");
    try {
        validate(g, true);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotStronglyConnected);
    }
    EXPECT_NO_THROW(validate(g, false));
}

TEST(Validate, FourCycleGraph)
{
    EXPECT_NO_THROW(validate(instances::four_cycle_graph(), true));
}

TEST(Validate, ConstructionErrors)
{
    Digraph g;
    g.add_vertex("a");
    try {
        g.add_vertex("a");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DuplicateId);
    }
    try {
        g.add_edge("x", "a", "zz");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DanglingEndpoint);
    }
    g.add_edge("x", "a", "a");
    try {
        g.add_edge("x", "a", "a");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DuplicateId);
    }
}

TEST(Sccs, EscapeArenaSinksFirst)
{
    Arena a = instances::escape_arena(1);
    auto comps = sccs(a.graph);
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0], std::vector<VertexIndex>{a.graph.vertex("c")});
    EXPECT_EQ(comps[1], (std::vector<VertexIndex>{a.graph.vertex("a"), a.graph.vertex("b")}));
}

TEST(Sccs, StronglyConnectedIsOneComponent)
{
    EXPECT_EQ(sccs(instances::complete_digraph()).size(), 1u);
}

TEST(Sccs, DagSinksFirst)
{
    Digraph g;
    for (auto v : {"x", "y", "z"}) g.add_vertex(v);
    g.add_edge("xy", "x", "y");
    g.add_edge("yz", "y", "z");
    auto comps = sccs(g);
    ASSERT_EQ(comps.size(), 3u);
    EXPECT_EQ(g.vertex_id(comps[0][0]), "z");
    EXPECT_EQ(g.vertex_id(comps[1][0]), "y");
    EXPECT_EQ(g.vertex_id(comps[2][0]), "x");
}

TEST(Sccs, RandomPartitionAndOrder)
{
    Rng rng(11);
    for (int it = 0; it < 100; ++it) {
        std::size_t n = 1 + it % 7;
        Digraph g = random_digraph(rng, n, n + it % 5);
        auto comps = sccs(g);
        std::vector<int> comp_of(n, -1);
        for (std::size_t c = 0; c < comps.size(); ++c)
            for (auto v : comps[c]) {
                ASSERT_EQ(comp_of[v], -1);
                comp_of[v] = static_cast<int>(c);
            }
        for (auto c : comp_of) ASSERT_GE(c, 0);
        // Sinks first: edges only go to the same or an earlier component.
        for (EdgeIndex e = 0; e < g.num_edges(); ++e) EXPECT_LE(comp_of[g.dst(e)], comp_of[g.src(e)]);
        // Maximality: mutual reachability equals same component.
        for (VertexIndex u = 0; u < n; ++u) {
            VertexSet from(n, false);
            from[u] = true;
            auto ru = reachable(g, from, EdgeSet(g.num_edges(), true));
            for (VertexIndex v = 0; v < n; ++v) {
                VertexSet fv(n, false);
                fv[v] = true;
                auto rv = reachable(g, fv, EdgeSet(g.num_edges(), true));
                EXPECT_EQ(ru[v] && rv[u], comp_of[u] == comp_of[v]);
            }
        }
    }
}

TEST(Attractor, Trivial)
{
    Arena a = instances::escape_arena(1);
    EXPECT_EQ(attractor(a, VertexSet(3, true), Player::Max), VertexSet(3, true));
    EXPECT_EQ(attractor(a, VertexSet(3, false), Player::Min), VertexSet(3, false));
}

TEST(Attractor, EscapeArenaMaxReachesSink)
{
    // a is Max with an edge to c; b is Min with all edges into {a, c} once a joins.
    Arena a = instances::escape_arena(1);
    VertexSet target(3, false);
    target[a.graph.vertex("c")] = true;
    auto attr = attractor(a, target, Player::Max);
    EXPECT_EQ(member_ids(a.graph, attr), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(Attractor, MinVertexWithLoopStaysOut)
{
    // Same shape, but b keeps a private loop, so only a is pulled in.
    Digraph g;
    for (auto v : {"a", "b", "c"}) g.add_vertex(v);
    g.add_edge("ab", "a", "b");
    g.add_edge("ac", "a", "c");
    g.add_edge("ba", "b", "a");
    g.add_edge("bb", "b", "b");
    g.add_edge("cc", "c", "c");
    Arena a(std::move(g), {Player::Max, Player::Min, Player::Max});
    VertexSet target(3, false);
    target[a.graph.vertex("c")] = true;
    EXPECT_EQ(member_ids(a.graph, attractor(a, target, Player::Max)), (std::vector<std::string>{"a", "c"}));
}

TEST(Attractor, MonotoneAndIdempotent)
{
    Rng rng(5);
    for (int it = 0; it < 100; ++it) {
        Arena a = random_arena(rng, {static_cast<std::size_t>(2 + it % 5), static_cast<std::size_t>(it % 6), true, true});
        const std::size_t n = a.num_vertices();
        VertexSet s(n, false), t(n, false);
        for (std::size_t v = 0; v < n; ++v) {
            s[v] = uniform_int(rng, 0, 3) == 0;
            t[v] = s[v] || uniform_int(rng, 0, 2) == 0;
        }
        for (auto p : {Player::Max, Player::Min}) {
            auto as = attractor(a, s, p);
            auto at = attractor(a, t, p);
            for (std::size_t v = 0; v < n; ++v)
                if (as[v]) {
                    EXPECT_TRUE(at[v]);
                }
            EXPECT_EQ(attractor(a, as, p), as);
        }
    }
}

TEST(Cycles, FourCycleGraph)
{
    auto cs = enumerate_cycles(instances::four_cycle_graph());
    std::vector<std::vector<std::string>> expect{
        {"f1", "f2"}, {"f1", "f5", "f6"}, {"f2", "f3", "f4"}, {"f3", "f4", "f5", "f6"}};
    EXPECT_EQ(keys(cs), expect);
}

TEST(Cycles, CompleteDigraphOnFour)
{
    // 6 two-cycles, 8 three-cycles, 6 four-cycles.
    EXPECT_EQ(enumerate_cycles(instances::complete_digraph()).size(), 20u);
}

TEST(Cycles, ParallelLoops)
{
    auto cs = enumerate_cycles(instances::loops(2));
    ASSERT_EQ(cs.size(), 2u);
    EXPECT_EQ(cs[0].key, std::vector<std::string>{"l1"});
    EXPECT_EQ(cs[1].key, std::vector<std::string>{"l2"});
}

TEST(Cycles, BudgetExceeded)
{
    try {
        enumerate_cycles(instances::complete_digraph(), 19);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::CycleBudgetExceeded);
    }
    EXPECT_EQ(enumerate_cycles(instances::complete_digraph(), 20).size(), 20u);
}

TEST(Cycles, VertexSequenceStartsAtLeastId)
{
    for (auto &c : enumerate_cycles(instances::complete_digraph())) {
        const auto &g = instances::complete_digraph();
        for (auto v : c.vertices) EXPECT_LE(g.vertex_id(c.vertices[0]), g.vertex_id(v));
    }
}

TEST(Cycles, FromEdgesRejectsNonCycles)
{
    Digraph g = instances::four_cycle_graph();
    auto bad = [&](std::vector<std::string> ids) {
        try {
            Cycle::from_ids(g, ids);
            return false;
        } catch (const Error &e) {
            return e.code() == ErrorCode::UnknownCycle;
        }
    };
    EXPECT_TRUE(bad({}));
    EXPECT_TRUE(bad({"f1"}));
    EXPECT_TRUE(bad({"f1", "f2", "f3"}));
    EXPECT_TRUE(bad({"f1", "f2", "f3", "f4", "f5", "f6"}));
    EXPECT_TRUE(bad({"nope"}));
    EXPECT_FALSE(bad({"f2", "f1"}));
}

TEST(Cycles, AgreeWithExhaustiveSearch)
{
    Rng rng(1);
    for (int it = 0; it < 150; ++it) {
        std::size_t n = 1 + it % 5;
        std::size_t m = 1 + it % 12;
        Digraph g = random_digraph(rng, n, m);
        auto cs = enumerate_cycles(g);
        for (auto &c : cs) {
            std::map<VertexIndex, int> in, out;
            for (auto e : c.edges) {
                ++out[g.src(e)];
                ++in[g.dst(e)];
            }
            for (auto &[v, d] : out) EXPECT_EQ(d, 1);
            for (auto &[v, d] : in) EXPECT_EQ(d, 1);
        }
        auto k = keys(cs);
        EXPECT_TRUE(std::is_sorted(k.begin(), k.end()));
        std::set<std::vector<std::string>> got(k.begin(), k.end());
        EXPECT_EQ(got.size(), k.size());
        EXPECT_EQ(got, brute_force_cycles(g)) << "n=" << n << " m=" << m;
    }
}

TEST(CycleSpace, Examples)
{
    EXPECT_EQ(cycle_space_rank(instances::complete_digraph()), 9u);
    EXPECT_EQ(cycle_space_rank(instances::loops(1)), 1u);
    EXPECT_EQ(cycle_space_rank(instances::four_cycle_graph()), 3u);
}

TEST(CycleSpace, RequiresStrongConnectivity)
{
    Digraph g;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_edge("ab", "a", "b");
    EXPECT_THROW(cycle_space_rank(g), Error);
}

TEST(CycleSpace, RandomMultigraphs)
{
    Rng rng(3);
    for (int it = 0; it < 100; ++it) {
        Digraph g = random_strongly_connected(rng, {static_cast<std::size_t>(1 + it % 7), static_cast<std::size_t>(it % 6), true, true});
        EXPECT_EQ(cycle_space_rank(g), g.num_edges() - g.num_vertices() + 1);
    }
}

TEST(Strategy, EdgesOfStrategySubgraph)
{
    Arena a = instances::escape_arena(1);
    std::vector<std::optional<EdgeIndex>> choice(3);
    choice[a.graph.vertex("a")] = a.graph.edge("ab");
    choice[a.graph.vertex("c")] = a.graph.edge("cc");
    StrategySubgraph s(a, choice);
    auto es = s.edges();
    EXPECT_TRUE(es[a.graph.edge("ab")]);
    EXPECT_FALSE(es[a.graph.edge("ac")]);
    EXPECT_TRUE(es[a.graph.edge("ba")]);
    EXPECT_TRUE(es[a.graph.edge("bc")]);
    choice[a.graph.vertex("a")] = a.graph.edge("ba");
    EXPECT_THROW(StrategySubgraph(a, choice), Error);
}

TEST(ParseRational, Forms)
{
    EXPECT_EQ(parse_rational("-3"), -3);
    EXPECT_EQ(parse_rational("+7/2"), Rational(7, 2));
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
    EXPECT_EQ(parse_rational("-.5"), Rational(-1, 2));
    // Leading zeros are decimal, not octal or hex.
    EXPECT_EQ(parse_rational("010"), 10);
    EXPECT_EQ(parse_rational("08/010"), Rational(4, 5));
    EXPECT_EQ(parse_rational("1.08"), Rational(27, 25));
    for (auto bad : {"", "1/0", "0x10", "1.", "1.2/3", "a", "1/-2", "--1"})
        EXPECT_THROW(parse_rational(bad), Error) << bad;
}
