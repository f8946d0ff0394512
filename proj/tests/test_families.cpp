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

#include "cyclepat/families.hpp"
#include "cyclepat/games.hpp"
#include "cyclepat/parity.hpp"
#include "cyclepat/realize.hpp"

#include <gtest/gtest.h>

using namespace cyclepat;
using namespace cyclepat::families;

namespace {

Cycle cycle_of(const Digraph &g, std::vector<std::string> ids) { return Cycle::from_ids(g, ids); }

// Partition of every arena in the family under substituted weights.
std::vector<VertexSet> partitions(const ReductionFamily &fam, const std::vector<long> &values)
{
    std::vector<VertexSet> out;
    for (std::size_t a = 0; a < fam.arenas.size(); ++a)
        out.push_back(solve_general(fam.arenas[a].arena, fam.weights_for(a, values), Algo::Oracle).v_plus);
    return out;
}

std::vector<long> true_values(const ReductionFamily &fam)
{
    std::vector<long> v;
    for (auto &z : fam.weights) v.push_back(z.get_si());
    return v;
}

} // namespace

TEST(Gi, OneBlock)
{
    auto gi = gen_gi(1);
    const auto &g = gi.graph;
    ASSERT_EQ(g.num_edges(), 8u);
    for (VertexIndex v = 0; v < 4; ++v) {
        std::set<unsigned long> prs;
        for (auto e : g.out_edges(v)) {
            prs.insert(gi.priorities[e]);
            EXPECT_EQ(g.dst(e), (v + 1) % 4);
        }
        EXPECT_EQ(prs, (std::set<unsigned long>{2 * v + 1, 2 * v + 2}));
    }
    EXPECT_EQ(enumerate_cycles(g).size(), 16u);
    auto p = CyclePattern::parity_induced(g, gi.priorities);
    EXPECT_EQ(p.sign_of(cycle_of(g, {"e1", "e4", "e5", "e8"})), Sign::Plus);
    EXPECT_EQ(p.sign_of(cycle_of(g, {"e1", "e3", "e5", "e7"})), Sign::Minus);
}

TEST(Gi, TwoBlocks)
{
    auto gi = gen_gi(2);
    EXPECT_EQ(gi.graph.num_edges(), 16u);
    EXPECT_EQ(enumerate_cycles(gi.graph).size(), 256u);
    auto p = CyclePattern::parity_induced(gi.graph, gi.priorities);
    EXPECT_EQ(p.sign_of(cycle_of(gi.graph, {"e1", "e4", "e13", "e8"})), Sign::Minus);
    EXPECT_EQ(gi.graph.src(gi.graph.edge("e13")), gi.graph.vertex("v3"));
}

TEST(Gi, FibonacciChainAtOneBlock)
{
    auto gi = gen_gi(1);
    auto cone = build_cone(CyclePattern::parity_induced(gi.graph, gi.priorities));
    auto r = minimal_linf(cone);
    EXPECT_TRUE(fibonacci_chain_holds(gi.graph, r.w));
    EXPECT_GE(r.w[gi.graph.edge("e8")] - r.w[gi.graph.edge("e7")], 2);
    EXPECT_TRUE(same_pattern(CyclePattern::parity_induced(gi.graph, gi.priorities), CyclePattern::weight_induced(gi.graph, r.w)));
    auto sys = cone.system;
    sys.box = r.k - 1;
    EXPECT_FALSE(ilp_feasible(sys));
}

TEST(Fas1Variant, Structure)
{
    for (std::size_t i : {1u, 2u}) {
        auto f = gen_fas1_variant(i);
        const auto &g = f.graph;
        EXPECT_EQ(g.num_vertices(), 4 + 8 * i + 1);
        EXPECT_TRUE(is_simple(g));
        ASSERT_TRUE(f.marked);
        EXPECT_FALSE(is_acyclic(g, EdgeSet(g.num_edges(), true)));
        EdgeSet rest(g.num_edges(), true);
        rest[*f.marked] = false;
        EXPECT_TRUE(is_acyclic(g, rest));

        // Bijection with the cycles of G_i, preserving parity signs.
        auto gi = gen_gi(i);
        auto pg = CyclePattern::parity_induced(gi.graph, gi.priorities);
        auto pf = CyclePattern::parity_induced(g, f.priorities);
        auto cycles = enumerate_cycles(g);
        EXPECT_EQ(cycles.size(), (2 * i) * (2 * i) * (2 * i) * (2 * i));
        std::set<CycleKey> images;
        for (auto &c : cycles) {
            std::vector<std::string> ids;
            for (auto e : c.edges) {
                const auto &id = g.edge_id(e);
                if (id.back() == 'a') ids.push_back(id.substr(0, id.size() - 1));
            }
            auto image = cycle_of(gi.graph, ids);
            images.insert(image.key);
            EXPECT_EQ(pf.sign_of(c), pg.sign_of(image));
        }
        EXPECT_EQ(images.size(), cycles.size());
    }
}

TEST(SimpleVariant, SplitterSubgraph)
{
    auto s = gen_simple_variant(6, 3);
    const auto &g = s.graph;
    EXPECT_EQ(g.num_vertices(), 6u + 6 * 3);
    EXPECT_TRUE(is_simple(g));
    auto p = CyclePattern::parity_induced(g, s.priorities);
    auto plus = cycle_of(g, {"e13a", "e13b", "e15a", "e15b", "e18a", "e18b", "base4", "base5", "base6"});
    auto minus = cycle_of(g, {"e14a", "e14b", "e16a", "e16b", "e17a", "e17b", "base4", "base5", "base6"});
    EXPECT_EQ(p.sign_of(plus), Sign::Plus);
    EXPECT_EQ(p.sign_of(minus), Sign::Minus);
}

TEST(SimpleVariant, EverySixConsecutivePriorities)
{
    for (std::size_t k : {3u, 6u})
        for (std::size_t i : {1u, 2u, 3u}) {
            auto s = gen_simple_variant(k, i);
            const auto &g = s.graph;
            EXPECT_EQ(g.num_vertices(), k + 6 * i);
            EXPECT_TRUE(is_simple(g));
            auto p = CyclePattern::parity_induced(g, s.priorities);
            auto vertex_of = [&](unsigned long prio) { return ((prio + 1) / 2 - 1) % k + 1; };
            for (unsigned long l = 1; l + 2 <= k * i; ++l) {
                unsigned long o = 2 * l - 1; // priorities o..o+5
                std::size_t start = vertex_of(o);
                auto build = [&](std::vector<unsigned long> prios) {
                    std::vector<std::string> ids;
                    for (auto q : prios) {
                        ids.push_back("e" + std::to_string(q) + "a");
                        ids.push_back("e" + std::to_string(q) + "b");
                    }
                    for (std::size_t v = (start + 2) % k + 1; v != start; v = v % k + 1) ids.push_back("base" + std::to_string(v));
                    return cycle_of(g, ids);
                };
                EXPECT_EQ(p.sign_of(build({o, o + 2, o + 5})), Sign::Plus) << k << " " << i << " " << l;
                EXPECT_EQ(p.sign_of(build({o + 1, o + 3, o + 4})), Sign::Minus) << k << " " << i << " " << l;
            }
        }
    EXPECT_THROW(gen_simple_variant(4, 1), Error);
}

TEST(ReductionArenas, SixStructureAndPartitions)
{
    auto fam = gen_reduction_arenas(6);
    ASSERT_EQ(fam.arenas.size(), 6u);
    EXPECT_EQ(fam.weights, (std::vector<Integer>{-2, 4, -8, 16, -32, 64}));
    auto parts = partitions(fam, true_values(fam));
    for (std::size_t a = 0; a < 6; ++a) {
        const auto &ra = fam.arenas[a];
        std::size_t i = a / 2 + 1;
        EXPECT_EQ(ra.arena.num_edges(), 6u);
        EXPECT_EQ(ra.arena.num_vertices(), 3 + i - 2);
        std::set<std::size_t> idx(ra.weight_index.begin(), ra.weight_index.end());
        EXPECT_EQ(idx.size(), 6u);
        EXPECT_EQ(ra.cycle_c.size(), i);
        // C is a cycle owned by the stated player; C' uses only the opponent apart from v1.
        auto c = Cycle::from_edges(ra.arena.graph, ra.cycle_c);
        for (auto v : c.vertices) EXPECT_EQ(ra.arena.owner[v], ra.max_cycle ? Player::Max : Player::Min);
        // No leftover edge starts at v1.
        for (auto e : ra.arena.graph.out_edges(0)) {
            bool on_c = std::count(ra.cycle_c.begin(), ra.cycle_c.end(), e) > 0;
            bool on_cp = std::count(ra.cycle_c_prime.begin(), ra.cycle_c_prime.end(), e) > 0;
            EXPECT_TRUE(on_c || on_cp);
        }
        EXPECT_EQ(parts[a], VertexSet(ra.arena.num_vertices(), !ra.max_cycle)) << "arena " << a + 1;
    }
}

TEST(ReductionArenas, SixHasNoSmallPreservingWeights)
{
    auto fam = gen_reduction_arenas(6);
    auto target = partitions(fam, true_values(fam));
    std::vector<long> x(6, -1);
    int preserving = 0;
    for (;;) {
        if (partitions(fam, x) == target) ++preserving;
        std::size_t j = 0;
        while (j < 6 && x[j] == 1) x[j++] = -1;
        if (j == 6) break;
        ++x[j];
    }
    EXPECT_EQ(preserving, 0);
    // The bound is tight in the sense that the exponential sequences at k = 3 give a preserving vector with norm 2.
    auto seq = exp_integer_seq(3);
    std::vector<long> interleaved;
    for (std::size_t t = 0; t < 3; ++t) {
        interleaved.push_back(seq.a[t].get_si());
        interleaved.push_back(seq.b[t].get_si());
    }
    EXPECT_EQ(partitions(fam, interleaved), target);
}

TEST(ReductionArenas, FourIsDegenerate)
{
    // C' of the odd arenas has no vertex besides v1, so the positive leftovers sit on Max vertices.
    auto fam = gen_reduction_arenas(4);
    ASSERT_EQ(fam.arenas.size(), 4u);
    auto parts = partitions(fam, true_values(fam));
    EXPECT_EQ(parts[0], VertexSet(1, true));
    EXPECT_EQ(fam.arenas[0].arena.num_vertices(), 1u);
    EXPECT_THROW(gen_reduction_arenas(5), Error);
    EXPECT_THROW(gen_reduction_arenas(2), Error);
}

TEST(ExpIntegerSeq, Examples)
{
    auto s1 = exp_integer_seq(1);
    EXPECT_EQ(s1.a, std::vector<Integer>{-1});
    EXPECT_EQ(s1.b, std::vector<Integer>{0});
    auto s2 = exp_integer_seq(2);
    EXPECT_EQ(s2.a, (std::vector<Integer>{-1, -1}));
    EXPECT_EQ(s2.b, (std::vector<Integer>{0, 1}));
    EXPECT_EQ(s2.c, (std::vector<Integer>{0, 0}));
    auto s5 = exp_integer_seq(5);
    EXPECT_EQ(std::max(abs(s5.a[4]), abs(s5.b[4])), 8);
    for (std::size_t k = 1; k <= 16; ++k) {
        auto s = exp_integer_seq(k);
        EXPECT_TRUE(satisfies_exponential_system(s)) << k;
        if (k >= 2) {
            Integer bound;
            mpz_ui_pow_ui(bound.get_mpz_t(), 2, k - 2);
            EXPECT_EQ(std::max(abs(s.a[k - 1]), abs(s.b[k - 1])), bound);
        }
    }
    auto broken = exp_integer_seq(3);
    broken.b[2] = 0;
    EXPECT_FALSE(satisfies_exponential_system(broken));
}

TEST(ExpIntegerSeq, SystemBoundByExhaustiveSearch)
{
    // Any solution with entries in [-3, 3] at k = 3 has max(|a_3|, |b_3|) >= 2.
    const int r = 3;
    long best = 100;
    std::vector<int> v(9, -r);
    for (;;) {
        bool ok = true;
        int sa = 0, sb = 0;
        for (int t = 0; t < 3 && ok; ++t) {
            ok = sa + v[3 + t] + v[6 + t] >= 0 && sb + v[t] + v[6 + t] < 0;
            sa += v[t];
            sb += v[3 + t];
        }
        if (ok) best = std::min<long>(best, std::max(std::abs(v[2]), std::abs(v[5])));
        std::size_t j = 0;
        while (j < 9 && v[j] == r) v[j++] = -r;
        if (j == 9) break;
        ++v[j];
    }
    EXPECT_EQ(best, 2);
}

TEST(Fibonacci, Values)
{
    EXPECT_EQ(fibonacci(1), 1);
    EXPECT_EQ(fibonacci(2), 1);
    EXPECT_EQ(fibonacci(10), 55);
    EXPECT_EQ(fibonacci(0), 0);
    EXPECT_EQ(fibonacci(-1), 1);
}
