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

#include <map>
#include <variant>

namespace cyclepat {

struct ZeroCycleWitness {
    Cycle cycle;
};

/// Edge set in which every edge lies on a positive and on a negative cycle inside the set.
struct MixedSetWitness {
    std::vector<EdgeIndex> edges;
    std::map<EdgeIndex, std::pair<Cycle, Cycle>> per_edge; // edge -> (plus cycle, minus cycle)
};

using ParityWitness = std::variant<ZeroCycleWitness, MixedSetWitness>;

struct ParityOutcome {
    std::optional<PriorityFn> priorities;
    std::optional<ParityWitness> witness;
    std::vector<EdgeIndex> peel_order; // assignment order of the successful run
};

/// Peeling: repeatedly take the lowest-id edge whose cycles inside the remaining set agree
/// in sign and give it the next lower priority of matching parity.
inline ParityOutcome check_parity_realizable(const CyclePattern &pattern, std::size_t budget = kDefaultCycleBudget)
{
    const Digraph &g = pattern.graph();
    const std::size_t m = g.num_edges();
    auto cycles = pattern.signed_cycles(budget);
    ParityOutcome out;
    for (auto &sc : cycles)
        if (sc.sign == Sign::Zero) {
            out.witness = ZeroCycleWitness{sc.cycle};
            return out;
        }

    std::vector<std::vector<std::size_t>> through(m);
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (auto e : cycles[i].cycle.edges) through[e].push_back(i);
    std::vector<bool> cycle_alive(cycles.size(), true);
    std::vector<bool> in_s(m, true);
    auto order = g.edges_by_id();

    // Raw priorities strictly decreasing from 2m+1; compacted afterwards.
    std::vector<long> raw(m, 0);
    long prev = 2 * static_cast<long>(m) + 2;
    for (std::size_t step = 0; step < m; ++step) {
        std::optional<EdgeIndex> pick;
        Sign pick_sign = Sign::Plus;
        for (auto e : order) {
            if (!in_s[e]) continue;
            bool plus = false, minus = false;
            for (auto i : through[e]) {
                if (!cycle_alive[i]) continue;
                (cycles[i].sign == Sign::Plus ? plus : minus) = true;
            }
            if (plus && minus) continue;
            pick = e;
            pick_sign = minus ? Sign::Minus : Sign::Plus;
            break;
        }
        if (!pick) {
            MixedSetWitness w;
            for (auto e : order) {
                if (!in_s[e]) continue;
                w.edges.push_back(e);
                std::optional<Cycle> p, q;
                for (auto i : through[e]) {
                    if (!cycle_alive[i]) continue;
                    if (cycles[i].sign == Sign::Plus && !p) p = cycles[i].cycle;
                    if (cycles[i].sign == Sign::Minus && !q) q = cycles[i].cycle;
                }
                w.per_edge.emplace(e, std::make_pair(*p, *q));
            }
            std::sort(w.edges.begin(), w.edges.end());
            out.witness = std::move(w);
            return out;
        }
        long want = pick_sign == Sign::Plus ? 0 : 1;
        long p = prev - 1;
        if (((p % 2) + 2) % 2 != want) --p;
        raw[*pick] = p;
        prev = p;
        in_s[*pick] = false;
        for (auto i : through[*pick]) cycle_alive[i] = false;
        out.peel_order.push_back(*pick);
    }

    // Compact from the lowest upward, keeping order and parity.
    std::vector<unsigned long> pr(m, 0);
    long last = -1;
    for (auto it = out.peel_order.rbegin(); it != out.peel_order.rend(); ++it) {
        long v = last + 1;
        if (v % 2 != raw[*it] % 2) ++v;
        pr[*it] = static_cast<unsigned long>(v);
        last = v;
    }
    out.priorities = PriorityFn(std::move(pr));
    return out;
}

inline bool verify_parity_witness(const CyclePattern &pattern, const ParityWitness &wit)
{
    const Digraph &g = pattern.graph();
    if (auto *z = std::get_if<ZeroCycleWitness>(&wit)) return pattern.sign_of(z->cycle) == Sign::Zero;
    const auto &ms = std::get<MixedSetWitness>(wit);
    if (ms.edges.empty() || ms.per_edge.size() != ms.edges.size()) return false;
    std::vector<bool> in_s(g.num_edges(), false);
    for (auto e : ms.edges) in_s[e] = true;
    for (auto e : ms.edges) {
        auto it = ms.per_edge.find(e);
        if (it == ms.per_edge.end()) return false;
        const auto &[p, q] = it->second;
        for (const Cycle *c : {&p, &q}) {
            if (!c->contains(e)) return false;
            for (auto f : c->edges)
                if (!in_s[f]) return false;
        }
        if (pattern.sign_of(p) != Sign::Plus || pattern.sign_of(q) != Sign::Minus) return false;
    }
    return true;
}

/// w'(e) = (-n)^p(e).
inline WeightFn parity_to_weights(const Digraph &g, const PriorityFn &p)
{
    if (p.size() != g.num_edges()) throw Error(ErrorCode::DimensionMismatch, "priority function size differs from edge count");
    const long n = static_cast<long>(g.num_vertices());
    std::vector<Rational> w;
    w.reserve(p.size());
    for (auto pe : p.values) {
        Integer z;
        mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(n), pe);
        if (pe % 2 == 1) z = -z;
        w.emplace_back(z);
    }
    return WeightFn(std::move(w));
}

} // namespace cyclepat
