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

#include "cyclepat/instances.hpp"
#include "cyclepat/ldt_probe.hpp"
#include "cyclepat/random.hpp"

#include <gtest/gtest.h>

using namespace cyclepat;

namespace {

Rational dot(const std::vector<Integer> &a, const WeightFn &w)
{
    Rational s = 0;
    for (std::size_t e = 0; e < a.size(); ++e) s += Rational(a[e]) * w[e];
    return s;
}

Arena random_sc(Rng &rng)
{
    RandomGraphOptions opt;
    opt.n = static_cast<std::size_t>(uniform_int(rng, 2, 5));
    opt.extra_edges = static_cast<std::size_t>(uniform_int(rng, 1, 5));
    return random_arena(rng, opt);
}

} // namespace

TEST(Trace, LoopQueryIsItsCharacteristicVector)
{
    Arena a(instances::loops(1), {Player::Max});
    auto w = WeightFn::from_ints(std::vector<int>{1});
    for (auto algo : {TracedAlgo::Gkk, TracedAlgo::ValueIteration}) {
        auto t = traced_solve(a, w, algo);
        EXPECT_TRUE(t.partition.v_plus[0]);
        auto h = t.trace.hyperplanes();
        EXPECT_TRUE(h.count(std::vector<Integer>{1})) << "algo " << int(algo);
        ASSERT_EQ(t.trace.queries.size(), t.trace.outcomes.size());
    }
}

TEST(Trace, RecordedOutcomesMatchConcreteSigns)
{
    Rng rng(71);
    for (int it = 0; it < 60; ++it) {
        Arena a = random_sc(rng);
        auto w = random_weights(rng, a.graph, -4, 4);
        for (auto algo : {TracedAlgo::Gkk, TracedAlgo::ValueIteration}) {
            auto t = traced_solve(a, w, algo);
            for (std::size_t q = 0; q < t.trace.queries.size(); ++q)
                ASSERT_EQ(sign_of(dot(t.trace.queries[q], w)), t.trace.outcomes[q]);
        }
    }
}

TEST(Trace, PositiveScalingGivesIdenticalOutcomes)
{
    Rng rng(72);
    for (int it = 0; it < 40; ++it) {
        Arena a = random_sc(rng);
        auto w = random_weights(rng, a.graph, -5, 5);
        auto t1 = traced_solve(a, w, TracedAlgo::Gkk);
        auto t3 = traced_solve(a, w.scaled(3), TracedAlgo::Gkk);
        EXPECT_EQ(t1.trace.queries, t3.trace.queries);
        EXPECT_EQ(t1.trace.outcomes, t3.trace.outcomes);
        EXPECT_EQ(t1.partition.v_plus, t3.partition.v_plus);
    }
}

TEST(Trace, ReplayReproducesPartition)
{
    Rng rng(73);
    for (int it = 0; it < 80; ++it) {
        Arena a = random_sc(rng);
        auto w = random_weights(rng, a.graph, -6, 6);
        for (auto algo : {TracedAlgo::Gkk, TracedAlgo::ValueIteration}) {
            auto t = traced_solve(a, w, algo);
            EXPECT_EQ(replay_partition(a, t.trace, algo), t.partition.v_plus);
            EXPECT_EQ(t.partition.v_plus, solve_oracle(a, w).v_plus);
        }
    }
}

TEST(Trace, ReplayRejectsForeignTrace)
{
    Arena a(instances::loops(2), {Player::Max});
    auto t = traced_solve(a, WeightFn::from_ints(std::vector<int>{1, -1}), TracedAlgo::Gkk);
    ASSERT_FALSE(t.trace.queries.empty());
    QueryTrace bad = t.trace;
    bad.queries.front() = {Integer(2), Integer(7)};
    try {
        replay_partition(a, bad, TracedAlgo::Gkk);
        FAIL() << "expected OracleInconsistent";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::OracleInconsistent);
    }
}

TEST(Trace, NonIntegralRejected)
{
    Arena a(instances::loops(1), {Player::Max});
    EXPECT_THROW(traced_solve(a, WeightFn({Rational(1, 2)}), TracedAlgo::Gkk), Error);
}

TEST(Hyperplane, NormalizationIsIdempotent)
{
    Rng rng(74);
    for (int it = 0; it < 200; ++it) {
        std::vector<Integer> a(5);
        bool nz = false;
        for (auto &x : a) {
            x = uniform_int(rng, -12, 12);
            nz = nz || x != 0;
        }
        if (!nz) continue;
        auto h = normalize_hyperplane(a);
        EXPECT_EQ(normalize_hyperplane(h), h);
        std::vector<Integer> neg;
        for (auto &x : a) neg.push_back(-3 * x);
        EXPECT_EQ(normalize_hyperplane(neg), h);
    }
    EXPECT_THROW(normalize_hyperplane({Integer(0), Integer(0)}), Error);
}

TEST(Boundary, AllMaxTriangle)
{
    Arena a(instances::directed_cycle(3), {Player::Max, Player::Max, Player::Max});
    auto c = Cycle::from_edges(a.graph, {0, 1, 2});
    for (Rational eps : {Rational(1, 4), Rational(1, 8)}) {
        auto p = boundary_probe(a, c, eps);
        for (auto &x : p.w_base.values) EXPECT_EQ(x, 0);
        EXPECT_EQ(p.part_plus.v_plus, VertexSet(3, true));
        EXPECT_EQ(p.part_minus.v_plus, VertexSet(3, false));
        EXPECT_EQ(p.w_plus.of(c), eps);
        EXPECT_EQ(p.w_minus.of(c), -eps);
    }
}

TEST(Boundary, InvalidArguments)
{
    Arena a(instances::directed_cycle(3), {Player::Max, Player::Min, Player::Max});
    auto c = Cycle::from_edges(a.graph, {0, 1, 2});
    for (Rational eps : {Rational(0), Rational(1, 2), Rational(-1, 3), Rational(2)}) {
        try {
            boundary_probe(a, c, eps);
            FAIL() << "eps " << eps.get_str();
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
        }
    }
    Cycle foreign = c;
    foreign.key = {"x", "y", "z"};
    try {
        boundary_probe(a, foreign, Rational(1, 4));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownCycle);
    }
}

TEST(Boundary, RandomArenasAndSolversAgree)
{
    Rng rng(75);
    int probes = 0;
    for (int it = 0; probes < 20 && it < 200; ++it) {
        Arena a = random_sc(rng);
        auto cycles = enumerate_cycles(a.graph);
        const Cycle &c = cycles[static_cast<std::size_t>(uniform_int(rng, 0, int(cycles.size()) - 1))];
        auto p = boundary_probe(a, c, Rational(1, 4));
        ++probes;
        // The forest reaches C from everywhere and w_base vanishes on it.
        for (EdgeIndex e = 0; e < a.num_edges(); ++e)
            if (p.forest[e] || c.contains(e)) {
                EXPECT_EQ(p.w_base[e], 0);
            }
        std::size_t forest_edges = 0;
        for (bool b : p.forest) forest_edges += b;
        EXPECT_EQ(forest_edges, a.num_vertices() - c.vertices.size());
        auto q = boundary_probe(a, c, Rational(1, 8), Algo::Oracle);
        EXPECT_EQ(p.part_minus.v_plus, q.part_minus.v_plus);
        // Traced solves on either side: some recorded query must change sign across the boundary.
        Integer l = lcm_of_denominators(p.w_plus.values);
        auto wp = p.w_plus.scaled(Rational(l)), wm = p.w_minus.scaled(Rational(l));
        auto tp = traced_solve(a, wp, TracedAlgo::Gkk);
        bool separates = false;
        for (auto &qv : tp.trace.queries) separates = separates || sign_of(dot(qv, wp)) != sign_of(dot(qv, wm));
        EXPECT_TRUE(separates);
    }
    EXPECT_EQ(probes, 20);
}

TEST(Separation, LoopArena)
{
    // One vertex, one loop: both signs of the loop weight produce different partitions,
    // so every trace must contain the loop's characteristic vector.
    for (auto owner : {Player::Max, Player::Min}) {
        Arena a(instances::loops(1), {owner});
        for (int s : {1, -1}) {
            auto t = traced_solve(a, WeightFn::from_ints(std::vector<int>{s}), TracedAlgo::Gkk);
            EXPECT_EQ(t.partition.v_plus[0], s > 0);
            EXPECT_TRUE(t.trace.hyperplanes().count(std::vector<Integer>{1}));
        }
    }
}
