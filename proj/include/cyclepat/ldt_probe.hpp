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

#include "cyclepat/games.hpp"
#include "cyclepat/linear_form.hpp"

namespace cyclepat {

enum class TracedAlgo { Gkk, ValueIteration };

struct TracedSolve {
    Partition partition;
    QueryTrace trace;
};

namespace detail {

template <class Ctx>
VertexSet traced_partition(const Arena &arena, Ctx &ctx, TracedAlgo algo, std::size_t *work = nullptr)
{
    const std::size_t n = arena.num_vertices();
    VertexSet plus(n, false);
    if (algo == TracedAlgo::Gkk) {
        auto run = gkk_core(arena, ctx);
        for (std::size_t v = 0; v < n; ++v) plus[v] = !run.l[v];
        if (work) *work = run.iterations;
    } else {
        auto run = energy_core(arena, ctx);
        for (std::size_t v = 0; v < n; ++v) plus[v] = bool(run.f[v]);
        if (work) *work = run.lifts;
    }
    return plus;
}

} // namespace detail

/// Runs the solver on symbolic weights and records every sign comparison as an integer vector.
inline TracedSolve traced_solve(const Arena &arena, const WeightFn &w, TracedAlgo algo)
{
    require_integral(w, arena);
    RecordingContext ctx(w);
    TracedSolve out;
    if (algo == TracedAlgo::Gkk) {
        auto run = gkk_core(arena, ctx);
        out.partition = gkk_partition(arena, run);
    } else {
        out.partition.v_plus = detail::traced_partition(arena, ctx, algo, &out.partition.iterations);
    }
    out.trace = std::move(ctx.trace);
    return out;
}

/// Re-runs the solver as a pure decision tree that reads only the recorded outcomes.
inline VertexSet replay_partition(const Arena &arena, const QueryTrace &trace, TracedAlgo algo)
{
    ReplayContext ctx(trace, arena.num_edges());
    auto plus = detail::traced_partition(arena, ctx, algo);
    if (ctx.consumed() != trace.queries.size())
        throw Error(ErrorCode::OracleInconsistent, "replay consumed fewer queries than recorded");
    return plus;
}

// ---------------------------------------------------------------------------
// Boundary probe

struct BoundaryProbe {
    Cycle cycle;
    Rational eps;
    EdgeSet forest;      // shortest-path forest into the cycle
    WeightFn w_base;
    WeightFn w_plus, w_minus;
    Partition part_plus, part_minus;
};

/// Any positive scaling keeps the partition; integral solvers get the LCM-scaled weights.
inline Partition solve_rational(const Arena &arena, const WeightFn &w, Algo algo)
{
    if (algo == Algo::Gkk || algo == Algo::Energy) {
        Integer l = lcm_of_denominators(w.values);
        return solve_general(arena, w.scaled(Rational(l)), algo);
    }
    return solve_general(arena, w, algo);
}

/// BFS forest toward V(C): each vertex off C keeps its lowest-id edge to a vertex one step closer.
inline EdgeSet shortest_path_forest(const Digraph &g, const Cycle &c)
{
    const std::size_t n = g.num_vertices();
    std::vector<long> dist(n, -1);
    std::vector<VertexIndex> frontier;
    for (auto v : c.vertices) {
        dist[v] = 0;
        frontier.push_back(v);
    }
    EdgeSet forest(g.num_edges(), false);
    for (long d = 1; !frontier.empty(); ++d) {
        std::vector<VertexIndex> next;
        for (auto v : frontier)
            for (auto e : g.in_edges(v)) {
                VertexIndex u = g.src(e);
                if (dist[u] < 0) {
                    dist[u] = d;
                    next.push_back(u);
                }
            }
        for (auto u : next) {
            std::optional<EdgeIndex> best;
            for (auto e : g.out_edges(u))
                if (dist[g.dst(e)] == d - 1 && (!best || g.edge_id(e) < g.edge_id(*best))) best = e;
            forest[*best] = true;
        }
        frontier = std::move(next);
    }
    for (std::size_t v = 0; v < n; ++v)
        if (dist[v] < 0) throw Error(ErrorCode::NotStronglyConnected, "vertex cannot reach the probed cycle");
    return forest;
}

inline BoundaryProbe boundary_probe(const Arena &arena, const Cycle &cycle, const Rational &eps, Algo algo = Algo::Gkk)
{
    const auto &g = arena.graph;
    validate(g, true);
    if (!(eps > 0 && eps < Rational(1, 2))) throw Error(ErrorCode::InvalidArgument, "eps must lie strictly between 0 and 1/2");
    Cycle c = Cycle::from_edges(g, cycle.edges);
    if (c.key != cycle.key) throw Error(ErrorCode::UnknownCycle, "probe cycle does not match the graph");
    BoundaryProbe out{c, eps, shortest_path_forest(g, c), {}, {}, {}, {}, {}};
    const long n = static_cast<long>(g.num_vertices());
    std::vector<Rational> base(g.num_edges()), plus, minus;
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
        if (c.contains(e) || out.forest[e])
            base[e] = 0;
        else
            base[e] = arena.owner[g.src(e)] == Player::Min ? n : -n;
    }
    plus = minus = base;
    Rational share = eps / static_cast<long>(c.edges.size());
    for (auto e : c.edges) {
        plus[e] += share;
        minus[e] -= share;
    }
    out.w_base = WeightFn(std::move(base));
    out.w_plus = WeightFn(std::move(plus));
    out.w_minus = WeightFn(std::move(minus));
    out.part_plus = solve_rational(arena, out.w_plus, algo);
    out.part_minus = solve_rational(arena, out.w_minus, algo);
    for (bool b : out.part_plus.v_plus)
        if (!b) throw std::logic_error("positive side of the probe is not all of V");
    if (out.part_plus.v_plus == out.part_minus.v_plus) throw std::logic_error("probe did not cross the boundary");
    return out;
}

} // namespace cyclepat
