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
#include "cyclepat/parity.hpp"
#include "cyclepat/random.hpp"
#include "cyclepat/realize.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace cyclepat;

namespace {

// Only the relative order and parity of priorities matter: try every edge ordering and parity vector.
bool brute_parity_realizable(const CyclePattern &p)
{
    const std::size_t m = p.graph().num_edges();
    auto cycles = p.signed_cycles();
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        for (unsigned bits = 0; bits < (1u << m); ++bits) {
            std::vector<unsigned long> pr(m);
            for (std::size_t r = 0; r < m; ++r) pr[perm[r]] = 2 * r + ((bits >> r) & 1u);
            bool ok = true;
            for (auto &sc : cycles) {
                unsigned long best = 0;
                for (auto e : sc.cycle.edges) best = std::max(best, pr[e]);
                if ((best % 2 == 0 ? Sign::Plus : Sign::Minus) != sc.sign) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

void expect_sound(const CyclePattern &p, const ParityOutcome &out)
{
    const std::size_t m = p.graph().num_edges();
    if (out.priorities) {
        EXPECT_TRUE(same_pattern(materialize(p), materialize(CyclePattern::parity_induced(p.graph(), *out.priorities))));
        ASSERT_EQ(out.peel_order.size(), m);
        for (std::size_t i = 1; i < m; ++i)
            EXPECT_GT((*out.priorities)[out.peel_order[i - 1]], (*out.priorities)[out.peel_order[i]]);
        for (auto v : out.priorities->values) EXPECT_LE(v, 2 * m);
    } else {
        ASSERT_TRUE(out.witness);
        EXPECT_TRUE(verify_parity_witness(p, *out.witness));
    }
}

} // namespace

TEST(ParityRealizable, TwoLoops)
{
    auto g = instances::loops(2);
    auto p = CyclePattern::table(g, {{{"l1"}, Sign::Plus}, {{"l2"}, Sign::Minus}});
    auto out = check_parity_realizable(p);
    ASSERT_TRUE(out.priorities);
    EXPECT_EQ((*out.priorities)[0] % 2, 0u);
    EXPECT_EQ((*out.priorities)[1] % 2, 1u);
    EXPECT_GT((*out.priorities)[0], (*out.priorities)[1]);
    expect_sound(p, out);
}

TEST(ParityRealizable, MixedK4)
{
    auto g = instances::complete_digraph(4);
    auto p = materialize(CyclePattern::weight_induced(g, instances::k4_mixed_weights(g)));
    auto out = check_parity_realizable(p);
    ASSERT_FALSE(out.priorities);
    ASSERT_TRUE(out.witness);
    auto *ms = std::get_if<MixedSetWitness>(&*out.witness);
    ASSERT_TRUE(ms);
    EXPECT_EQ(ms->edges.size(), 12u);
    EXPECT_TRUE(verify_parity_witness(p, *out.witness));
    // Still realizable by weights.
    EXPECT_TRUE(std::holds_alternative<Realization>(check_realizable(p)));
}

TEST(ParityRealizable, ZeroCycle)
{
    auto g = instances::directed_cycle(3);
    auto p = CyclePattern::table(g, {{{"e0", "e1", "e2"}, Sign::Zero}});
    auto out = check_parity_realizable(p);
    ASSERT_TRUE(out.witness);
    auto *z = std::get_if<ZeroCycleWitness>(&*out.witness);
    ASSERT_TRUE(z);
    EXPECT_EQ(z->cycle.key, (CycleKey{"e0", "e1", "e2"}));
    EXPECT_TRUE(verify_parity_witness(p, *out.witness));
}

TEST(ParityRealizable, FourCyclePattern)
{
    auto p = instances::four_cycle_pattern();
    auto out = check_parity_realizable(p);
    EXPECT_FALSE(out.priorities);
    expect_sound(p, out);
}

TEST(ParityRealizable, WitnessRejections)
{
    auto g = instances::loops(2);
    auto p = CyclePattern::table(g, {{{"l1"}, Sign::Plus}, {{"l2"}, Sign::Minus}});
    auto l1 = Cycle::from_ids(g, {"l1"}), l2 = Cycle::from_ids(g, {"l2"});
    EXPECT_FALSE(verify_parity_witness(p, ZeroCycleWitness{l1}));
    MixedSetWitness bad;
    bad.edges = {0, 1};
    bad.per_edge.emplace(0, std::make_pair(l1, l2));
    bad.per_edge.emplace(1, std::make_pair(l1, l2));
    EXPECT_FALSE(verify_parity_witness(p, bad));
    EXPECT_FALSE(verify_parity_witness(p, MixedSetWitness{}));
}

TEST(ParityToWeights, Examples)
{
    auto g = instances::directed_cycle(4);
    auto w = parity_to_weights(g, PriorityFn(std::vector<int>{2, 1, 0, 3}));
    EXPECT_EQ(w[0], 16);
    EXPECT_EQ(w[1], -4);
    EXPECT_EQ(w[2], 1);
    EXPECT_EQ(w[3], -64);
    EXPECT_THROW(parity_to_weights(g, PriorityFn(std::vector<int>{1})), Error);
}

TEST(ParityProperties, ReductionPreservesPattern)
{
    Rng rng(31);
    for (int it = 0; it < 80; ++it) {
        auto g = random_strongly_connected(rng, {static_cast<std::size_t>(1 + it % 6), 4, true, true});
        auto p = random_priorities(rng, g, 8);
        EXPECT_TRUE(same_pattern(CyclePattern::parity_induced(g, p), CyclePattern::weight_induced(g, parity_to_weights(g, p))));
    }
}

TEST(ParityProperties, CompletenessAndRealizability)
{
    Rng rng(32);
    for (int it = 0; it < 100; ++it) {
        auto g = random_strongly_connected(rng, {static_cast<std::size_t>(1 + it % 6), static_cast<std::size_t>(it % 5), true, true});
        auto pat = CyclePattern::parity_induced(g, random_priorities(rng, g, 7));
        auto out = check_parity_realizable(pat);
        ASSERT_TRUE(out.priorities) << "case " << it;
        expect_sound(pat, out);
        auto r = check_realizable(CyclePattern::weight_induced(g, parity_to_weights(g, *out.priorities)));
        EXPECT_TRUE(std::holds_alternative<Realization>(r));
    }
}

TEST(ParityProperties, AgreesWithExhaustivePriorities)
{
    auto check = [](const CyclePattern &p, int &yes, int &no) {
        auto out = check_parity_realizable(p);
        EXPECT_EQ(out.priorities.has_value(), brute_parity_realizable(p));
        expect_sound(p, out);
        (out.priorities ? yes : no)++;
    };
    int yes = 0, no = 0;
    // Every +/- table on the complete digraph on three vertices.
    auto k3 = instances::complete_digraph(3);
    auto cycles = enumerate_cycles(k3);
    ASSERT_EQ(cycles.size(), 5u);
    for (unsigned code = 0; code < 32; ++code) {
        std::map<CycleKey, Sign> t;
        for (std::size_t i = 0; i < cycles.size(); ++i) t[cycles[i].key] = (code >> i) & 1u ? Sign::Plus : Sign::Minus;
        check(CyclePattern::table(k3, t), yes, no);
    }
    Rng rng(33);
    for (int it = 0; it < 60; ++it) {
        auto g = random_strongly_connected(rng, {static_cast<std::size_t>(2 + it % 3), static_cast<std::size_t>(2 + it % 3), true, true});
        if (g.num_edges() > 6) continue;
        std::map<CycleKey, Sign> t;
        for (auto &c : enumerate_cycles(g)) t[c.key] = uniform_int(rng, 0, 1) ? Sign::Plus : Sign::Minus;
        check(CyclePattern::table(g, t), yes, no);
    }
    EXPECT_GT(yes, 10);
    EXPECT_GT(no, 3);
}
