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

#include "cyclepat/extended.hpp"
#include "cyclepat/instances.hpp"
#include "cyclepat/random.hpp"

#include <gtest/gtest.h>

using namespace cyclepat;

namespace {

// Random walk of at most `len` edges from s; stops early at sinks.
std::vector<EdgeIndex> random_walk(Rng &rng, const Digraph &g, VertexIndex s, int len)
{
    std::vector<EdgeIndex> w;
    VertexIndex at = s;
    for (int i = 0; i < len; ++i) {
        const auto &outs = g.out_edges(at);
        if (outs.empty()) break;
        EdgeIndex e = outs[static_cast<std::size_t>(uniform_int(rng, 0, int(outs.size()) - 1))];
        w.push_back(e);
        at = g.dst(e);
    }
    return w;
}

VertexIndex end_of(const Digraph &g, VertexIndex s, const std::vector<EdgeIndex> &w)
{
    return w.empty() ? s : g.dst(w.back());
}

Rational weight(const WeightFn &w, const std::vector<EdgeIndex> &walk)
{
    Rational s = 0;
    for (auto e : walk) s += w[e];
    return s;
}

// Numeric Bellman-Ford from s; nullopt entries are unreachable, and `neg` marks minus infinity.
struct Numeric {
    std::vector<std::optional<Rational>> d;
    std::vector<bool> neg;
};

Numeric numeric_bf(const Digraph &g, const WeightFn &w, VertexIndex s)
{
    const std::size_t n = g.num_vertices();
    Numeric r{std::vector<std::optional<Rational>>(n), std::vector<bool>(n, false)};
    r.d[s] = Rational(0);
    for (std::size_t it = 0; it < n; ++it)
        for (EdgeIndex e = 0; e < g.num_edges(); ++e)
            if (r.d[g.src(e)] && (!r.d[g.dst(e)] || *r.d[g.src(e)] + w[e] < *r.d[g.dst(e)]))
                r.d[g.dst(e)] = *r.d[g.src(e)] + w[e];
    for (std::size_t it = 0; it < n; ++it)
        for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
            VertexIndex u = g.src(e), v = g.dst(e);
            if (!r.d[u]) continue;
            if (r.neg[u] || *r.d[u] + w[e] < *r.d[v]) {
                r.neg[v] = true;
                r.d[v] = *r.d[u] + w[e];
            }
        }
    return r;
}

bool has_zero_cycle(const Digraph &g, const WeightFn &w)
{
    for (auto &c : enumerate_cycles(g))
        if (w.of(c) == 0) return true;
    return false;
}

bool has_negative_cycle(const Digraph &g, const WeightFn &w)
{
    for (auto &c : enumerate_cycles(g))
        if (w.of(c) < 0) return true;
    return false;
}

} // namespace

TEST(ExtendedOracle, AntisymmetricAndExact)
{
    Rng rng(81);
    int checked = 0;
    while (checked < 1000) {
        RandomGraphOptions opt;
        opt.n = static_cast<std::size_t>(uniform_int(rng, 2, 5));
        opt.extra_edges = 4;
        auto g = random_strongly_connected(rng, opt);
        auto w = random_weights(rng, g, -7, 7);
        auto o = oracle_from_weights(g, w);
        for (int k = 0; k < 50; ++k) {
            VertexIndex s = static_cast<VertexIndex>(uniform_int(rng, 0, int(g.num_vertices()) - 1));
            auto p = random_walk(rng, g, s, uniform_int(rng, 0, 6));
            auto q = random_walk(rng, g, s, uniform_int(rng, 0, 6));
            VertexIndex t = end_of(g, s, p);
            if (end_of(g, s, q) != t) continue;
            Sign a = o.compare({s, t, p, q}), b = o.compare({s, t, q, p});
            EXPECT_EQ(a, negate(b));
            EXPECT_EQ(a, sign_of(weight(w, p) - weight(w, q)));
            ++checked;
        }
    }
}

TEST(ExtendedOracle, RejectsMismatchedEndpoints)
{
    auto g = instances::directed_cycle(3);
    auto o = oracle_from_weights(g, WeightFn::from_ints(std::vector<int>{1, 2, 3}));
    EXPECT_THROW(o.compare({0, 1, {0}, {0, 1}}), Error);
    EXPECT_THROW(o.compare({0, 1, {1}, {0}}), Error);
    EXPECT_EQ(o.compare({0, 0, {}, {0, 1, 2}}), Sign::Minus);
}

TEST(OracleBellmanFord, MatchesNumericOnRandomGraphs)
{
    Rng rng(82);
    int graphs = 0, with_negative = 0;
    while (graphs < 100) {
        std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 6));
        auto g = random_digraph(rng, n, n + static_cast<std::size_t>(uniform_int(rng, 0, 6)));
        auto w = random_weights(rng, g, -6, 9);
        if (has_zero_cycle(g, w)) continue;
        ++graphs;
        auto o = oracle_from_weights(g, w);
        auto neg = ext_negative_cycle(o);
        bool expect_neg = has_negative_cycle(g, w);
        ASSERT_EQ(neg.has_value(), expect_neg);
        if (neg) {
            ++with_negative;
            EXPECT_LT(w.of(*neg), 0);
        }
        for (VertexIndex s = 0; s < n; ++s) {
            auto num = numeric_bf(g, w, s);
            for (VertexIndex t = 0; t < n; ++t) {
                if (!num.d[t]) {
                    EXPECT_FALSE(ext_shortest_walk(o, s, t).has_value());
                } else if (num.neg[t]) {
                    try {
                        ext_shortest_walk(o, s, t);
                        ADD_FAILURE() << "expected NegativeCycleReachable";
                    } catch (const Error &e) {
                        EXPECT_EQ(e.code(), ErrorCode::NegativeCycleReachable);
                    }
                } else {
                    auto walk = ext_shortest_walk(o, s, t);
                    ASSERT_TRUE(walk.has_value());
                    check_walk(g, s, t, *walk);
                    EXPECT_EQ(weight(w, *walk), *num.d[t]);
                }
            }
        }
    }
    EXPECT_GT(with_negative, 10);
    EXPECT_LT(with_negative, 90);
}

TEST(OracleBellmanFord, TieBreakPrefersFewerEdgesThenIds)
{
    // Two routes of equal weight 0 -> 2: direct "z" and via vertex 1 with "a","b".
    Digraph g;
    for (auto id : {"v0", "v1", "v2"}) g.add_vertex(id);
    g.add_edge("a", "v0", "v1");
    g.add_edge("b", "v1", "v2");
    g.add_edge("z", "v0", "v2");
    g.add_edge("y", "v0", "v2");
    auto o = oracle_from_weights(g, WeightFn::from_ints(std::vector<int>{1, 1, 2, 2}));
    auto walk = ext_shortest_walk(o, 0, 2);
    ASSERT_TRUE(walk);
    ASSERT_EQ(walk->size(), 1u);
    EXPECT_EQ(g.edge_id(walk->front()), "y");
}

TEST(OracleBellmanFord, InconsistentOracleDetected)
{
    // Comparisons claim every longer walk is cheaper while all cycles are positive.
    auto g = instances::directed_cycle(3);
    auto pattern = CyclePattern::weight_induced(g, WeightFn::from_ints(std::vector<int>{1, 1, 1}));
    ExtendedOracle liar(pattern, [](const PathPair &pp) {
        return pp.p.size() > pp.q.size() ? Sign::Minus : pp.p.size() < pp.q.size() ? Sign::Plus : Sign::Zero;
    });
    try {
        ext_negative_cycle(liar);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::OracleInconsistent);
    }
}
