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

#include "cyclepat/parity.hpp"
#include "cyclepat/pattern.hpp"

#include <optional>
#include <string_view>

namespace cyclepat {

using Strategy = std::vector<std::optional<EdgeIndex>>;

/// Zero-mean partition with optional positional certificates.
struct Partition {
    VertexSet v_plus;
    std::optional<Strategy> max_strategy;
    std::optional<Strategy> min_strategy;
    std::size_t iterations = 0; // solver-specific work counter

    bool operator==(const Partition &o) const { return v_plus == o.v_plus; }
};

enum class Algo { Oracle, Gkk, Energy, PatternOnly };

inline std::string_view algo_name(Algo a)
{
    switch (a) {
    case Algo::Oracle: return "oracle";
    case Algo::Gkk: return "gkk";
    case Algo::Energy: return "energy";
    case Algo::PatternOnly: return "pattern-only";
    }
    return "?";
}

inline std::optional<Algo> parse_algo(std::string_view s)
{
    for (auto a : {Algo::Oracle, Algo::Gkk, Algo::Energy, Algo::PatternOnly})
        if (algo_name(a) == s) return a;
    return std::nullopt;
}

/// Plain exact arithmetic for the templated solvers.
class ExactContext {
public:
    using Num = Rational;
    explicit ExactContext(const WeightFn &w) : w_(w) {}
    Num weight(EdgeIndex e) const { return w_[e]; }
    Num zero() const { return 0; }
    int sign(const Num &x) const { return sgn(x); }

private:
    const WeightFn &w_;
};

inline void require_integral(const WeightFn &w, const Arena &a)
{
    if (w.size() != a.num_edges()) throw Error(ErrorCode::DimensionMismatch, "weight function size differs from edge count");
    if (!w.integral()) throw Error(ErrorCode::NotIntegral, "solver needs integral weights");
}

// ---------------------------------------------------------------------------
// Strategy enumeration

namespace detail {

struct CycleIndex {
    std::vector<SignedCycle> cycles;
    std::vector<std::vector<std::pair<VertexIndex, EdgeIndex>>> steps; // (vertex, out-edge) along each cycle
};

inline CycleIndex index_cycles(const CyclePattern &pattern, std::size_t budget)
{
    CycleIndex ix;
    ix.cycles = pattern.signed_cycles(budget);
    for (auto &sc : ix.cycles) {
        std::vector<std::pair<VertexIndex, EdgeIndex>> st;
        for (std::size_t i = 0; i < sc.cycle.traversal.size(); ++i)
            st.emplace_back(sc.cycle.vertices[i], sc.cycle.traversal[i]);
        ix.steps.push_back(std::move(st));
    }
    return ix;
}

/// Iterates the positional strategies of one player in lexicographic order.
class StrategyOdometer {
public:
    StrategyOdometer(const Arena &a, Player p, std::size_t budget) : a_(a)
    {
        for (auto v : a.graph.vertices_by_id()) {
            if (a.owner[v] != p) continue;
            auto outs = a.graph.out_edges(v);
            std::sort(outs.begin(), outs.end(),
                      [&](EdgeIndex x, EdgeIndex y) { return a.graph.edge_id(x) < a.graph.edge_id(y); });
            verts_.push_back(v);
            choices_.push_back(std::move(outs));
        }
        Integer total = 1;
        for (auto &c : choices_) total *= static_cast<unsigned long>(c.size());
        if (total > Integer(static_cast<unsigned long>(budget)))
            throw Error(ErrorCode::StrategyBudgetExceeded, "more than " + std::to_string(budget) + " strategies");
        pos_.assign(verts_.size(), 0);
    }

    Strategy current() const
    {
        Strategy s(a_.num_vertices());
        for (std::size_t i = 0; i < verts_.size(); ++i) s[verts_[i]] = choices_[i][pos_[i]];
        return s;
    }

    bool next()
    {
        for (std::size_t i = verts_.size(); i-- > 0;) {
            if (++pos_[i] < choices_[i].size()) return true;
            pos_[i] = 0;
        }
        return false;
    }

private:
    const Arena &a_;
    std::vector<VertexIndex> verts_;
    std::vector<std::vector<EdgeIndex>> choices_;
    std::vector<std::size_t> pos_;
};

/// Vertices from which no cycle of the fixed player's subgraph with a bad sign is reachable.
inline VertexSet good_set(const Arena &a, const CycleIndex &ix, Player p, const Strategy &s, bool (*bad)(Sign))
{
    const auto &g = a.graph;
    const std::size_t n = g.num_vertices();
    VertexSet losing(n, false);
    std::vector<VertexIndex> stack;
    for (std::size_t c = 0; c < ix.cycles.size(); ++c) {
        if (!bad(ix.cycles[c].sign)) continue;
        bool inside = true;
        for (auto &[v, e] : ix.steps[c])
            if (a.owner[v] == p && s[v] != e) {
                inside = false;
                break;
            }
        if (!inside) continue;
        for (auto &[v, e] : ix.steps[c])
            if (!losing[v]) {
                losing[v] = true;
                stack.push_back(v);
            }
    }
    while (!stack.empty()) {
        VertexIndex v = stack.back();
        stack.pop_back();
        for (auto e : g.in_edges(v)) {
            VertexIndex u = g.src(e);
            if (losing[u]) continue;
            if (a.owner[u] == p && s[u] != e) continue;
            losing[u] = true;
            stack.push_back(u);
        }
    }
    VertexSet good(n);
    for (std::size_t v = 0; v < n; ++v) good[v] = !losing[v];
    return good;
}

inline bool max_bad(Sign s) { return s == Sign::Minus; }
inline bool min_bad(Sign s) { return s != Sign::Minus; }

inline bool covers(const VertexSet &big, const VertexSet &small)
{
    for (std::size_t i = 0; i < small.size(); ++i)
        if (small[i] && !big[i]) return false;
    return true;
}

inline Partition enumerate_partition(const Arena &a, const CyclePattern &pattern, std::size_t strategy_budget,
                                     std::size_t cycle_budget)
{
    if (!(pattern.graph() == a.graph)) throw Error(ErrorCode::InvalidArgument, "pattern belongs to a different graph");
    auto ix = index_cycles(pattern, cycle_budget);
    const std::size_t n = a.num_vertices();
    Partition out;
    out.v_plus.assign(n, false);
    {
        StrategyOdometer od(a, Player::Max, strategy_budget);
        do {
            auto good = good_set(a, ix, Player::Max, od.current(), max_bad);
            for (std::size_t v = 0; v < n; ++v)
                if (good[v]) out.v_plus[v] = true;
            ++out.iterations;
        } while (od.next());
    }
    {
        StrategyOdometer od(a, Player::Max, strategy_budget);
        do {
            auto s = od.current();
            if (covers(good_set(a, ix, Player::Max, s, max_bad), out.v_plus)) {
                out.max_strategy = s;
                break;
            }
        } while (od.next());
    }
    VertexSet v_minus(n);
    for (std::size_t v = 0; v < n; ++v) v_minus[v] = !out.v_plus[v];
    {
        StrategyOdometer od(a, Player::Min, strategy_budget);
        do {
            auto s = od.current();
            if (covers(good_set(a, ix, Player::Min, s, min_bad), v_minus)) {
                out.min_strategy = s;
                break;
            }
        } while (od.next());
    }
    return out;
}

} // namespace detail

/// Exact partition by enumerating every positional Max strategy.
inline Partition solve_oracle(const Arena &arena, const CyclePattern &pattern,
                              std::size_t strategy_budget = kDefaultStrategyBudget,
                              std::size_t cycle_budget = kDefaultCycleBudget)
{
    return detail::enumerate_partition(arena, pattern, strategy_budget, cycle_budget);
}

inline Partition solve_oracle(const Arena &arena, const WeightFn &w, std::size_t strategy_budget = kDefaultStrategyBudget,
                              std::size_t cycle_budget = kDefaultCycleBudget)
{
    return solve_oracle(arena, CyclePattern::weight_induced(arena.graph, w), strategy_budget, cycle_budget);
}

/// Same contract as the oracle, reading the pattern only through per-cycle sign queries.
inline Partition solve_pattern_only(const Arena &arena, const CyclePattern &pattern,
                                    std::size_t strategy_budget = kDefaultStrategyBudget,
                                    std::size_t cycle_budget = kDefaultCycleBudget)
{
    return detail::enumerate_partition(arena, pattern, strategy_budget, cycle_budget);
}

// ---------------------------------------------------------------------------
// Certificate check

inline bool verify_partition(const Arena &arena, const CyclePattern &pattern, const Partition &part,
                             std::size_t cycle_budget = kDefaultCycleBudget)
{
    if (!part.max_strategy || !part.min_strategy)
        throw Error(ErrorCode::MissingCertificate, "partition carries no certifying strategies");
    const auto &g = arena.graph;
    const std::size_t n = g.num_vertices();
    if (part.v_plus.size() != n) return false;
    auto check = [&](const Strategy &s, Player p, const VertexSet &from, bool (*bad)(Sign)) {
        if (s.size() != n) return false;
        EdgeSet es(g.num_edges(), false);
        for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
            VertexIndex v = g.src(e);
            if (arena.owner[v] != p) {
                es[e] = true;
                continue;
            }
            if (!s[v] || g.src(*s[v]) != v) return false;
            es[e] = *s[v] == e;
        }
        auto reach = reachable(g, from, es);
        for (EdgeIndex e = 0; e < g.num_edges(); ++e)
            if (!reach[g.src(e)]) es[e] = false;
        for (auto &c : enumerate_cycles(g, cycle_budget, &es))
            if (bad(pattern.sign_of(c))) return false;
        return true;
    };
    VertexSet v_minus(n);
    for (std::size_t v = 0; v < n; ++v) v_minus[v] = !part.v_plus[v];
    return check(*part.max_strategy, Player::Max, part.v_plus, detail::max_bad) &&
           check(*part.min_strategy, Player::Min, v_minus, detail::min_bad);
}

// ---------------------------------------------------------------------------
// GKK potential reduction

template <class Ctx>
struct GkkRun {
    using Num = typename Ctx::Num;
    VertexSet l;                     // final Min set
    std::vector<Num> eps;            // final potential
    std::vector<int> signs;          // final reduced-weight signs
    std::size_t iterations = 0;      // number of potential shifts
};

namespace detail {

/// Least set from which Min forces a negative reduced edge before any positive one.
/// reason[v] receives Min's witnessing edge when restrict is honoured.
inline VertexSet gkk_l(const Arena &a, const std::vector<int> &sg, const VertexSet *within = nullptr,
                       Strategy *reason = nullptr)
{
    const auto &g = a.graph;
    const std::size_t n = g.num_vertices();
    VertexSet l(n, false);
    auto usable = [&](EdgeIndex e) { return !within || ((*within)[g.src(e)] && (*within)[g.dst(e)]); };
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto v : g.vertices_by_id()) {
            if (l[v] || (within && !(*within)[v])) continue;
            bool join;
            std::optional<EdgeIndex> why;
            if (a.owner[v] == Player::Min) {
                join = false;
                for (auto e : g.out_edges(v)) {
                    if (!usable(e)) continue;
                    if (sg[e] < 0 || (sg[e] == 0 && l[g.dst(e)])) {
                        join = true;
                        why = e;
                        break;
                    }
                }
            } else {
                join = true;
                for (auto e : g.out_edges(v)) {
                    if (!usable(e)) continue;
                    if (!(sg[e] < 0 || (sg[e] == 0 && l[g.dst(e)]))) {
                        join = false;
                        break;
                    }
                }
            }
            if (join) {
                l[v] = true;
                changed = true;
                if (reason && why) (*reason)[v] = why;
            }
        }
    }
    return l;
}

} // namespace detail

template <class Ctx>
GkkRun<Ctx> gkk_core(const Arena &a, Ctx &ctx)
{
    using Num = typename Ctx::Num;
    const auto &g = a.graph;
    const std::size_t n = g.num_vertices(), m = g.num_edges();
    std::vector<Num> w;
    for (EdgeIndex e = 0; e < m; ++e) w.push_back(ctx.weight(e));
    GkkRun<Ctx> run;
    run.eps.assign(n, ctx.zero());
    auto reduced = [&](EdgeIndex e, const std::vector<Num> &eps) -> Num { return w[e] + eps[g.src(e)] - eps[g.dst(e)]; };
    auto signs_at = [&](const std::vector<Num> &eps) {
        std::vector<int> sg(m);
        for (EdgeIndex e = 0; e < m; ++e) sg[e] = ctx.sign(reduced(e, eps));
        return sg;
    };
    auto shifted = [&](const VertexSet &l, const Num &t) {
        std::vector<Num> eps = run.eps;
        for (std::size_t v = 0; v < n; ++v)
            if (l[v]) eps[v] = eps[v] + t;
        return eps;
    };
    Integer budget;
    mpz_ui_pow_ui(budget.get_mpz_t(), 2, n);
    budget += 1;

    for (;;) {
        auto sg = signs_at(run.eps);
        VertexSet l = detail::gkk_l(a, sg);
        // Crossing edges whose sign a shift on L can flip, with the shift that zeroes them.
        std::vector<Num> cands;
        for (EdgeIndex e = 0; e < m; ++e) {
            bool from_l = l[g.src(e)], to_l = l[g.dst(e)];
            if (from_l && !to_l && sg[e] < 0) cands.push_back(Num(ctx.zero() - reduced(e, run.eps)));
            if (!from_l && to_l && sg[e] > 0) cands.push_back(reduced(e, run.eps));
        }
        // Insertion sort with duplicates dropped; every comparison is a sign query.
        std::vector<Num> sorted;
        for (auto &c : cands) {
            std::size_t pos = 0;
            bool dup = false;
            while (pos < sorted.size()) {
                int s = ctx.sign(c - sorted[pos]);
                if (s == 0) {
                    dup = true;
                    break;
                }
                if (s < 0) break;
                ++pos;
            }
            if (!dup) sorted.insert(sorted.begin() + static_cast<long>(pos), c);
        }
        std::optional<Num> delta;
        for (auto &t : sorted) {
            if (detail::gkk_l(a, signs_at(shifted(l, t))) != l) {
                delta = t;
                break;
            }
        }
        if (!delta && !sorted.empty()) {
            Num beyond = sorted.back() + sorted.back();
            if (detail::gkk_l(a, signs_at(shifted(l, beyond))) != l) delta = beyond;
        }
        if (!delta) {
            run.l = std::move(l);
            run.signs = std::move(sg);
            return run;
        }
        run.eps = shifted(l, *delta);
        ++run.iterations;
        if (Integer(static_cast<unsigned long>(run.iterations)) > budget)
            throw Error(ErrorCode::IterationBudgetExceeded, "potential reduction exceeded 2^n + 1 shifts");
    }
}

/// Certificates from the final reduced-weight signs.
template <class Ctx>
Partition gkk_partition(const Arena &a, const GkkRun<Ctx> &run)
{
    const auto &g = a.graph;
    const std::size_t n = g.num_vertices();
    Partition p;
    p.v_plus.assign(n, false);
    for (std::size_t v = 0; v < n; ++v) p.v_plus[v] = !run.l[v];
    p.iterations = run.iterations;
    Strategy smax(n), smin(n);
    Strategy reason(n);
    detail::gkk_l(a, run.signs, &run.l, &reason);
    for (auto v : g.vertices_by_id()) {
        auto outs = g.out_edges(v);
        std::sort(outs.begin(), outs.end(), [&](EdgeIndex x, EdgeIndex y) { return g.edge_id(x) < g.edge_id(y); });
        if (a.owner[v] == Player::Max) {
            smax[v] = outs.front();
            if (p.v_plus[v])
                for (auto e : outs)
                    if (p.v_plus[g.dst(e)] && run.signs[e] >= 0) {
                        smax[v] = e;
                        break;
                    }
        } else {
            smin[v] = run.l[v] && reason[v] ? reason[v] : outs.front();
        }
    }
    p.max_strategy = std::move(smax);
    p.min_strategy = std::move(smin);
    return p;
}

inline Partition solve_gkk(const Arena &arena, const WeightFn &w)
{
    require_integral(w, arena);
    ExactContext ctx(w);
    return gkk_partition(arena, gkk_core(arena, ctx));
}

// ---------------------------------------------------------------------------
// Energy value iteration

template <class Ctx>
struct EnergyRun {
    using Num = typename Ctx::Num;
    std::vector<std::optional<Num>> f; // nullopt is infinity
    Num cap;
    std::size_t lifts = 0;
};

template <class Ctx>
EnergyRun<Ctx> energy_core(const Arena &a, Ctx &ctx)
{
    using Num = typename Ctx::Num;
    const auto &g = a.graph;
    const std::size_t n = g.num_vertices(), m = g.num_edges();
    std::vector<Num> w;
    for (EdgeIndex e = 0; e < m; ++e) w.push_back(ctx.weight(e));
    EnergyRun<Ctx> run{std::vector<std::optional<Num>>(n, ctx.zero()), ctx.zero(), 0};
    for (EdgeIndex e = 0; e < m; ++e) run.cap = ctx.sign(w[e]) >= 0 ? Num(run.cap + w[e]) : Num(run.cap - w[e]);

    auto term = [&](EdgeIndex e) -> std::optional<Num> {
        const auto &fu = run.f[g.dst(e)];
        if (!fu) return std::nullopt;
        Num d = *fu - w[e];
        if (ctx.sign(d) > 0) return d;
        return ctx.zero();
    };
    // Finite values compare through sign queries; infinity is absorbing.
    auto better = [&](const std::optional<Num> &x, const std::optional<Num> &y, bool want_min) {
        if (!x) return !want_min ? bool(y) : false;
        if (!y) return want_min;
        int s = ctx.sign(*x - *y);
        return want_min ? s < 0 : s > 0;
    };

    std::vector<VertexIndex> queue = g.vertices_by_id();
    std::vector<bool> queued(n, true);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexIndex v = queue[head];
        queued[v] = false;
        if (!run.f[v]) continue;
        bool want_min = a.owner[v] == Player::Max;
        std::optional<Num> best;
        bool first = true;
        for (auto e : g.out_edges(v)) {
            auto t = term(e);
            if (first || better(t, best, want_min)) best = t;
            first = false;
        }
        bool changed = false;
        if (!best) {
            run.f[v].reset();
            changed = true;
        } else if (ctx.sign(*best - *run.f[v]) > 0) {
            if (ctx.sign(*best - run.cap) > 0)
                run.f[v].reset();
            else
                run.f[v] = best;
            changed = true;
        }
        if (!changed) continue;
        ++run.lifts;
        for (auto e : g.in_edges(v)) {
            VertexIndex u = g.src(e);
            if (queued[u] || !run.f[u]) continue;
            queued[u] = true;
            queue.push_back(u);
        }
    }
    return run;
}

namespace detail {

/// Max strategy from finite energy values: the edge attaining the minimum at each finite Max vertex.
inline Strategy energy_strategy(const Arena &a, const WeightFn &w, const std::vector<std::optional<Rational>> &f, Player who)
{
    const auto &g = a.graph;
    Strategy s(g.num_vertices());
    for (auto v : g.vertices_by_id()) {
        if (a.owner[v] != who) continue;
        auto outs = g.out_edges(v);
        std::sort(outs.begin(), outs.end(), [&](EdgeIndex x, EdgeIndex y) { return g.edge_id(x) < g.edge_id(y); });
        s[v] = outs.front();
        if (!f[v]) continue;
        std::optional<Rational> best;
        for (auto e : outs) {
            if (!f[g.dst(e)]) continue;
            Rational t = *f[g.dst(e)] - w[e];
            if (t < 0) t = 0;
            if (!best || t < *best) {
                best = t;
                s[v] = e;
            }
        }
    }
    return s;
}

} // namespace detail

struct EnergyValue {
    std::vector<std::optional<Rational>> f;
    Rational cap;
    std::size_t lifts = 0;
};

/// Least energy fixpoint, its partition, and certificates; Min's comes from the dual game.
inline std::pair<EnergyValue, Partition> solve_energy(const Arena &arena, const WeightFn &w)
{
    require_integral(w, arena);
    const std::size_t n = arena.num_vertices();
    ExactContext ctx(w);
    auto run = energy_core(arena, ctx);
    EnergyValue val{run.f, run.cap, run.lifts};
    Partition p;
    p.v_plus.assign(n, false);
    for (std::size_t v = 0; v < n; ++v) p.v_plus[v] = bool(run.f[v]);
    p.iterations = run.lifts;
    p.max_strategy = detail::energy_strategy(arena, w, run.f, Player::Max);

    // Dual game: owners swapped, weights -(n w + 1); its finite region is Min's winning region.
    std::vector<Player> swapped(n);
    for (std::size_t v = 0; v < n; ++v) swapped[v] = opponent(arena.owner[v]);
    Arena dual(arena.graph, swapped);
    std::vector<Rational> wd;
    for (auto &x : w.values) wd.push_back(-(Rational(static_cast<long>(n)) * x + 1));
    WeightFn dual_w(std::move(wd));
    ExactContext dctx(dual_w);
    auto drun = energy_core(dual, dctx);
    for (std::size_t v = 0; v < n; ++v)
        if (bool(drun.f[v]) == p.v_plus[v]) throw std::logic_error("dual energy game disagrees with the primal");
    p.min_strategy = detail::energy_strategy(dual, dual_w, drun.f, Player::Max);
    return {std::move(val), std::move(p)};
}

// ---------------------------------------------------------------------------
// Arbitrary arenas: bottom components and attractors

namespace detail {

inline VertexSet attractor_with_strategy(const Arena &arena, const VertexSet &target, Player player,
                                         const VertexSet &alive, Strategy &strategy)
{
    const auto &g = arena.graph;
    const std::size_t n = g.num_vertices();
    VertexSet attr(n, false);
    std::vector<std::size_t> remaining(n, 0);
    std::vector<VertexIndex> queue;
    for (VertexIndex v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        for (auto e : g.out_edges(v))
            if (alive[g.dst(e)]) ++remaining[v];
        if (target[v]) {
            attr[v] = true;
            queue.push_back(v);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexIndex u = queue[head];
        for (auto e : g.in_edges(u)) {
            VertexIndex v = g.src(e);
            if (!alive[v] || attr[v]) continue;
            if (arena.owner[v] == player) {
                attr[v] = true;
                strategy[v] = e;
                queue.push_back(v);
            } else if (--remaining[v] == 0) {
                attr[v] = true;
                queue.push_back(v);
            }
        }
    }
    return attr;
}

struct SubArena {
    Arena arena;
    std::vector<VertexIndex> vmap; // local -> global
    std::vector<EdgeIndex> emap;   // local -> global
    WeightFn w;
};

inline SubArena sub_arena(const Arena &a, const WeightFn &w, const std::vector<VertexIndex> &verts)
{
    const auto &g = a.graph;
    std::vector<long> local(g.num_vertices(), -1);
    Digraph sg;
    SubArena s;
    std::vector<Player> owners;
    for (auto v : verts) {
        local[v] = static_cast<long>(sg.add_vertex(g.vertex_id(v)));
        s.vmap.push_back(v);
        owners.push_back(a.owner[v]);
    }
    std::vector<Rational> ws;
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
        if (local[g.src(e)] < 0 || local[g.dst(e)] < 0) continue;
        sg.add_edge(g.edge_id(e), static_cast<VertexIndex>(local[g.src(e)]), static_cast<VertexIndex>(local[g.dst(e)]));
        s.emap.push_back(e);
        ws.push_back(w[e]);
    }
    s.arena = Arena(std::move(sg), std::move(owners));
    s.w = WeightFn(std::move(ws));
    return s;
}

} // namespace detail

/// Partition of a strongly connected arena with the chosen algorithm.
inline Partition solve_with(const Arena &arena, const WeightFn &w, Algo algo,
                            std::size_t strategy_budget = kDefaultStrategyBudget,
                            std::size_t cycle_budget = kDefaultCycleBudget)
{
    switch (algo) {
    case Algo::Oracle: return solve_oracle(arena, w, strategy_budget, cycle_budget);
    case Algo::Gkk: return solve_gkk(arena, w);
    case Algo::Energy: return solve_energy(arena, w).second;
    case Algo::PatternOnly:
        return solve_pattern_only(arena, CyclePattern::weight_induced(arena.graph, w), strategy_budget, cycle_budget);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown algorithm");
}

/// Repeatedly solve a bottom component, remove both attractors, and continue on the rest.
inline Partition solve_general(const Arena &arena, const WeightFn &w, Algo inner = Algo::Gkk,
                               std::size_t strategy_budget = kDefaultStrategyBudget,
                               std::size_t cycle_budget = kDefaultCycleBudget)
{
    if (w.size() != arena.num_edges()) throw Error(ErrorCode::DimensionMismatch, "weight function size differs from edge count");
    const auto &g = arena.graph;
    const std::size_t n = g.num_vertices();
    Partition out;
    out.v_plus.assign(n, false);
    Strategy smax(n), smin(n);
    bool certified = true;
    VertexSet alive(n, true);
    std::size_t remaining = n;
    while (remaining > 0) {
        auto comps = sccs(g, alive);
        const auto &bottom = comps.front();
        auto sub = detail::sub_arena(arena, w, bottom);
        Partition local = solve_with(sub.arena, sub.w, inner, strategy_budget, cycle_budget);
        out.iterations += local.iterations;
        VertexSet plus(n, false), minus(n, false);
        for (std::size_t i = 0; i < sub.vmap.size(); ++i) {
            VertexIndex v = sub.vmap[i];
            (local.v_plus[i] ? plus : minus)[v] = true;
            if (local.max_strategy && (*local.max_strategy)[i]) smax[v] = sub.emap[*(*local.max_strategy)[i]];
            if (local.min_strategy && (*local.min_strategy)[i]) smin[v] = sub.emap[*(*local.min_strategy)[i]];
        }
        if (!local.max_strategy || !local.min_strategy) certified = false;
        VertexSet a1 = detail::attractor_with_strategy(arena, plus, Player::Max, alive, smax);
        VertexSet rest = alive;
        for (std::size_t v = 0; v < n; ++v)
            if (a1[v]) rest[v] = false;
        VertexSet a2 = detail::attractor_with_strategy(arena, minus, Player::Min, rest, smin);
        for (std::size_t v = 0; v < n; ++v) {
            if (a1[v]) out.v_plus[v] = true;
            if (a1[v] || a2[v]) {
                alive[v] = false;
                --remaining;
            }
        }
    }
    // Any edge will do where the owner has already lost or the choice is irrelevant.
    for (VertexIndex v = 0; v < n; ++v) {
        Strategy &s = arena.owner[v] == Player::Max ? smax : smin;
        if (!s[v]) s[v] = g.out_edges(v).front();
    }
    if (certified) {
        out.max_strategy = std::move(smax);
        out.min_strategy = std::move(smin);
    }
    return out;
}

inline Partition solve_parity_game(const Arena &arena, const PriorityFn &priorities, Algo inner = Algo::Gkk)
{
    return solve_general(arena, parity_to_weights(arena.graph, priorities), inner);
}

/// z(e) = 1 when the source of e lies in U, else -1.
inline WeightFn star_center(const Arena &arena, const VertexSet &u)
{
    const auto &g = arena.graph;
    std::vector<Rational> z(g.num_edges());
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) z[e] = u[g.src(e)] ? 1 : -1;
    return WeightFn(std::move(z));
}

} // namespace cyclepat
