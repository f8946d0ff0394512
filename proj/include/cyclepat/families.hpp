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

#include <string>

namespace cyclepat::families {

struct PriorityInstance {
    Digraph graph;
    PriorityFn priorities;
    std::optional<EdgeIndex> marked; // the split edge of the feedback-arc-set-1 variant
};

/// Four-vertex cycle with 2i parallel edges per step; edge e_j has priority j.
inline PriorityInstance gen_gi(std::size_t i)
{
    if (i < 1) throw Error(ErrorCode::InvalidArgument, "G_i needs i >= 1");
    PriorityInstance out;
    auto &g = out.graph;
    for (int k = 1; k <= 4; ++k) g.add_vertex("v" + std::to_string(k));
    const std::size_t m = 8 * i;
    std::vector<unsigned long> pr(m);
    for (std::size_t idx = 1; idx <= m; ++idx) {
        // idx = 8j + 2k - 9 or 8j + 2k - 8 for j in 1..i, k in 1..4.
        std::size_t k = ((idx - 1) % 8) / 2 + 1;
        g.add_edge("e" + std::to_string(idx), k - 1, k % 4);
        pr[idx - 1] = idx;
    }
    out.priorities = PriorityFn(std::move(pr));
    return out;
}

/// G_i with every edge subdivided and v1 split into v1in -> v1out by a priority-0 edge.
inline PriorityInstance gen_fas1_variant(std::size_t i)
{
    auto base = gen_gi(i);
    const auto &b = base.graph;
    PriorityInstance out;
    auto &g = out.graph;
    g.add_vertex("v1in");
    g.add_vertex("v1out");
    for (int k = 2; k <= 4; ++k) g.add_vertex("v" + std::to_string(k));
    auto head = [&](VertexIndex v) { return v == 0 ? std::string("v1out") : b.vertex_id(v); };
    auto tail = [&](VertexIndex v) { return v == 0 ? std::string("v1in") : b.vertex_id(v); };
    std::vector<unsigned long> pr;
    for (EdgeIndex e = 0; e < b.num_edges(); ++e) {
        std::string mid = "s" + b.edge_id(e).substr(1);
        g.add_vertex(mid);
        g.add_edge(b.edge_id(e) + "a", head(b.src(e)), mid);
        g.add_edge(b.edge_id(e) + "b", mid, tail(b.dst(e)));
        pr.push_back(base.priorities[e]);
        pr.push_back(base.priorities[e]);
    }
    out.marked = g.add_edge("split", "v1in", "v1out");
    pr.push_back(0);
    out.priorities = PriorityFn(std::move(pr));
    return out;
}

/// Simple variant: k-cycle, splitter vertices s{a}_{b}, and a priority-0 base cycle.
inline PriorityInstance gen_simple_variant(std::size_t k, std::size_t i)
{
    if (k < 3 || k % 3 != 0) throw Error(ErrorCode::InvalidArgument, "simple variant needs k >= 3 divisible by 3");
    if (i < 1) throw Error(ErrorCode::InvalidArgument, "simple variant needs i >= 1");
    PriorityInstance out;
    auto &g = out.graph;
    for (std::size_t p = 1; p <= k; ++p) g.add_vertex("v" + std::to_string(p));
    for (std::size_t a = 1; a <= 2 * i; ++a)
        for (std::size_t b = 1; b <= 3; ++b) g.add_vertex("s" + std::to_string(a) + "_" + std::to_string(b));
    std::vector<unsigned long> pr;
    for (std::size_t p = 1; p <= k; ++p) {
        std::string v = "v" + std::to_string(p), q = "v" + std::to_string(p % k + 1);
        std::size_t b = p % 3 == 0 ? 3 : p % 3;
        // Out-edges of v_p in increasing priority: 2jk+2p-1, 2jk+2p for j = 0..i-1.
        std::size_t a = 0;
        for (std::size_t j = 0; j < i; ++j)
            for (std::size_t off : {1, 0}) {
                unsigned long prio = 2 * j * k + 2 * p - off;
                std::string s = "s" + std::to_string(++a) + "_" + std::to_string(b);
                g.add_edge("e" + std::to_string(prio) + "a", v, s);
                g.add_edge("e" + std::to_string(prio) + "b", s, q);
                pr.push_back(prio);
                pr.push_back(prio);
            }
    }
    for (std::size_t p = 1; p <= k; ++p) {
        g.add_edge("base" + std::to_string(p), "v" + std::to_string(p), "v" + std::to_string(p % k + 1));
        pr.push_back(0);
    }
    out.priorities = PriorityFn(std::move(pr));
    return out;
}

struct ReductionArena {
    Arena arena;
    std::vector<std::size_t> weight_index; // edge -> j, meaning the edge carries w_j
    std::vector<EdgeIndex> cycle_c, cycle_c_prime;
    bool max_cycle = true; // C owned by Max (odd arenas) or Min (even arenas)
};

struct ReductionFamily {
    std::size_t m = 0;
    std::vector<Integer> weights; // w_1..w_m at index 0..m-1
    std::vector<ReductionArena> arenas;

    /// The weight function of arena `a` when w_j is replaced by values[j-1].
    template <class Num>
    WeightFn weights_for(std::size_t a, const std::vector<Num> &values) const
    {
        const auto &ra = arenas.at(a);
        std::vector<Rational> w;
        for (auto j : ra.weight_index) w.emplace_back(values.at(j - 1));
        return WeightFn(std::move(w));
    }

    WeightFn true_weights(std::size_t a) const { return weights_for(a, weights); }
};

/// m arenas sharing w_j = (-2)^j. Leftover weights become loops at the first non-v1 vertex of C',
/// falling back to C and then to v1 when the cycles are too short.
inline ReductionFamily gen_reduction_arenas(std::size_t m)
{
    if (m < 4 || m % 2 != 0) throw Error(ErrorCode::InvalidArgument, "reduction arenas need an even m >= 4");
    ReductionFamily fam;
    fam.m = m;
    for (std::size_t j = 1; j <= m; ++j) {
        Integer z;
        mpz_ui_pow_ui(z.get_mpz_t(), 2, j);
        fam.weights.push_back(j % 2 ? Integer(-z) : z);
    }
    const std::size_t half = m / 2;
    for (std::size_t arena = 1; arena <= m; ++arena) {
        std::size_t i = (arena + 1) / 2;
        bool odd = arena % 2 == 1;
        Player cp = odd ? Player::Max : Player::Min;
        std::vector<std::size_t> c_idx, cp_idx;
        // Odd arena: C = w_{2i-1}, w_2, ..., w_{2i-2}; C' = w_1, ..., w_{2i-3}, w_{2i+1}, ..., w_{m-1}.
        // Even arena: C = w_{2i}, w_1, ..., w_{2i-3}; C' = w_2, ..., w_{2i-2}, w_{2i+2}, ..., w_m.
        c_idx.push_back(odd ? 2 * i - 1 : 2 * i);
        for (std::size_t t = 1; t < i; ++t) c_idx.push_back(odd ? 2 * t : 2 * t - 1);
        for (std::size_t t = 1; t < i; ++t) cp_idx.push_back(odd ? 2 * t - 1 : 2 * t);
        for (std::size_t t = i + 1; t <= half; ++t) cp_idx.push_back(odd ? 2 * t - 1 : 2 * t);
        std::vector<bool> used(m + 1, false);
        for (auto j : c_idx) used[j] = true;
        for (auto j : cp_idx) used[j] = true;

        Digraph g;
        std::vector<Player> owners;
        g.add_vertex("v1");
        owners.push_back(cp);
        std::vector<VertexIndex> cv{0}, dv{0};
        for (std::size_t t = 1; t < c_idx.size(); ++t) {
            cv.push_back(g.add_vertex("c" + std::to_string(t)));
            owners.push_back(cp);
        }
        for (std::size_t t = 1; t < cp_idx.size(); ++t) {
            dv.push_back(g.add_vertex("d" + std::to_string(t)));
            owners.push_back(opponent(cp));
        }
        ReductionArena ra;
        ra.max_cycle = odd;
        auto add = [&](VertexIndex s, VertexIndex t, std::size_t j) {
            EdgeIndex e = g.add_edge("e" + std::to_string(j), s, t);
            ra.weight_index.push_back(j);
            return e;
        };
        for (std::size_t t = 0; t < c_idx.size(); ++t) ra.cycle_c.push_back(add(cv[t], cv[(t + 1) % cv.size()], c_idx[t]));
        for (std::size_t t = 0; t < cp_idx.size(); ++t)
            ra.cycle_c_prime.push_back(add(dv[t], dv[(t + 1) % dv.size()], cp_idx[t]));
        VertexIndex host = dv.size() > 1 ? dv[1] : cv.size() > 1 ? cv[1] : 0;
        for (std::size_t j = 1; j <= m; ++j)
            if (!used[j]) add(host, host, j);
        ra.arena = Arena(std::move(g), std::move(owners));
        fam.arenas.push_back(std::move(ra));
    }
    return fam;
}

struct IntegerSequences {
    std::vector<Integer> a, b, c;
};

/// a_i = floor(-2^(i-2)), b_i = floor(2^(i-2)), c_i = 0.
inline IntegerSequences exp_integer_seq(std::size_t k)
{
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "sequence length must be positive");
    IntegerSequences s;
    for (std::size_t i = 1; i <= k; ++i) {
        if (i == 1) {
            s.a.push_back(-1);
            s.b.push_back(0);
        } else {
            Integer z;
            mpz_ui_pow_ui(z.get_mpz_t(), 2, i - 2);
            s.a.push_back(-z);
            s.b.push_back(z);
        }
        s.c.push_back(0);
    }
    return s;
}

/// Both inequality families for every prefix.
inline bool satisfies_exponential_system(const IntegerSequences &s)
{
    const std::size_t k = s.a.size();
    if (s.b.size() != k || s.c.size() != k) return false;
    Integer sa = 0, sb = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (!(sa + s.b[i] + s.c[i] >= 0)) return false;
        if (!(sb + s.a[i] + s.c[i] < 0)) return false;
        sa += s.a[i];
        sb += s.b[i];
    }
    return true;
}

inline Integer fibonacci(long p)
{
    // F_1 = F_2 = 1, extended backwards by F_{p} = F_{p+2} - F_{p+1}.
    Integer a = 0, b = 1; // F_0, F_1
    if (p >= 0) {
        for (long t = 0; t < p; ++t) {
            Integer c = a + b;
            a = b;
            b = c;
        }
        return a;
    }
    for (long t = 0; t > p; --t) {
        Integer c = b - a;
        b = a;
        a = c;
    }
    return a;
}

/// w_{2j} - w_{2j-1} > F_{j-3} for j = 4..m/2 on the edges e1..em of G_i.
inline bool fibonacci_chain_holds(const Digraph &gi, const WeightFn &w)
{
    const long m = static_cast<long>(gi.num_edges());
    for (long j = 4; 2 * j <= m; ++j) {
        const auto &hi = w[gi.edge("e" + std::to_string(2 * j))];
        const auto &lo = w[gi.edge("e" + std::to_string(2 * j - 1))];
        if (!(hi - lo > Rational(fibonacci(j - 3)))) return false;
    }
    return true;
}

} // namespace cyclepat::families
