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

#include <functional>

namespace cyclepat {

/// Two walks with common endpoints; either walk may be empty when source == target.
struct PathPair {
    VertexIndex source = 0, target = 0;
    std::vector<EdgeIndex> p, q;
};

/// Throws InvalidArgument unless `walk` leads from s to t.
inline void check_walk(const Digraph &g, VertexIndex s, VertexIndex t, const std::vector<EdgeIndex> &walk)
{
    VertexIndex at = s;
    for (auto e : walk) {
        if (e >= g.num_edges() || g.src(e) != at) throw Error(ErrorCode::InvalidArgument, "edge sequence is not a walk");
        at = g.dst(e);
    }
    if (at != t) throw Error(ErrorCode::InvalidArgument, "walk does not end at the target");
}

/// Cycle signs together with comparisons sign(w(P) - w(Q)) of same-endpoint walks.
class ExtendedOracle {
public:
    using Compare = std::function<Sign(const PathPair &)>;

    ExtendedOracle(CyclePattern pattern, Compare compare) : pattern_(std::move(pattern)), compare_(std::move(compare)) {}

    const Digraph &graph() const noexcept { return pattern_.graph(); }
    const CyclePattern &pattern() const noexcept { return pattern_; }
    Sign cycle_sign(const Cycle &c) const { return pattern_.sign_of(c); }

    Sign compare(const PathPair &pp) const
    {
        check_walk(graph(), pp.source, pp.target, pp.p);
        check_walk(graph(), pp.source, pp.target, pp.q);
        ++queries_;
        return compare_(pp);
    }

    std::size_t queries() const noexcept { return queries_; }

private:
    CyclePattern pattern_;
    Compare compare_;
    mutable std::size_t queries_ = 0;
};

inline ExtendedOracle oracle_from_weights(const Digraph &g, const WeightFn &w)
{
    auto pattern = CyclePattern::weight_induced(g, w);
    return ExtendedOracle(std::move(pattern), [w](const PathPair &pp) {
        Rational d = 0;
        for (auto e : pp.p) d += w[e];
        for (auto e : pp.q) d -= w[e];
        return sign_of(d);
    });
}

namespace detail {

/// Bellman-Ford that only sees the oracle. Each vertex stores its current best walk from s.
/// Ties in value fall back to fewer edges, then lexicographically smaller edge ids.
class OracleBellmanFord {
public:
    OracleBellmanFord(const ExtendedOracle &o, VertexIndex s, const VertexSet &alive)
        : o_(o), g_(o.graph()), s_(s), alive_(alive), walk_(g_.num_vertices())
    {
        walk_[s].emplace();
    }

    /// One pass over all edges; returns the vertices whose walk improved.
    std::vector<VertexIndex> round()
    {
        std::vector<VertexIndex> improved;
        for (auto e : g_.edges_by_id()) {
            VertexIndex u = g_.src(e), v = g_.dst(e);
            if (!alive_[u] || !alive_[v] || !walk_[u]) continue;
            std::vector<EdgeIndex> cand = *walk_[u];
            cand.push_back(e);
            if (!walk_[v] || better(cand, *walk_[v], v)) {
                walk_[v] = std::move(cand);
                improved.push_back(v);
            }
        }
        return improved;
    }

    const std::optional<std::vector<EdgeIndex>> &walk(VertexIndex v) const { return walk_[v]; }

    /// Last edge of every stored walk.
    std::optional<EdgeIndex> pred(VertexIndex v) const
    {
        if (!walk_[v] || walk_[v]->empty()) return std::nullopt;
        return walk_[v]->back();
    }

private:
    bool better(const std::vector<EdgeIndex> &a, const std::vector<EdgeIndex> &b, VertexIndex v) const
    {
        Sign s = o_.compare({s_, v, a, b});
        if (s != Sign::Zero) return s == Sign::Minus;
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return g_.edge_id(a[i]) < g_.edge_id(b[i]);
        return false;
    }

    const ExtendedOracle &o_;
    const Digraph &g_;
    VertexIndex s_;
    VertexSet alive_;
    std::vector<std::optional<std::vector<EdgeIndex>>> walk_;
};

/// Simple cycles obtained by splitting a closed or open walk at repeated vertices.
inline std::vector<Cycle> split_cycles(const Digraph &g, const std::vector<EdgeIndex> &walk)
{
    std::vector<Cycle> out;
    std::vector<EdgeIndex> stack;
    std::vector<VertexIndex> at;
    if (walk.empty()) return out;
    at.push_back(g.src(walk.front()));
    for (auto e : walk) {
        stack.push_back(e);
        VertexIndex v = g.dst(e);
        auto it = std::find(at.begin(), at.end(), v);
        if (it != at.end()) {
            std::size_t k = static_cast<std::size_t>(it - at.begin());
            std::vector<EdgeIndex> cyc(stack.begin() + static_cast<long>(k), stack.end());
            out.push_back(Cycle::from_edges(g, cyc));
            stack.resize(k);
            at.resize(k + 1);
        } else {
            at.push_back(v);
        }
    }
    return out;
}

/// Negative cycle certified by the oracle from the final, still-improving round.
inline Cycle extract_negative_cycle(const ExtendedOracle &o, const OracleBellmanFord &bf, VertexIndex v)
{
    const auto &g = o.graph();
    const std::size_t n = g.num_vertices();
    std::vector<Cycle> candidates;
    // Walk predecessors n times to land on a predecessor cycle.
    VertexIndex x = v;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
        auto p = bf.pred(x);
        if (!p) ok = false;
        else x = g.src(*p);
    }
    if (ok) {
        std::vector<EdgeIndex> cyc;
        VertexIndex y = x;
        do {
            auto p = bf.pred(y);
            if (!p) {
                cyc.clear();
                break;
            }
            cyc.push_back(*p);
            y = g.src(*p);
        } while (y != x && cyc.size() <= n);
        if (!cyc.empty() && y == x) candidates.push_back(Cycle::from_edges(g, cyc));
    }
    for (VertexIndex u = 0; u < n; ++u)
        if (bf.walk(u))
            for (auto &c : split_cycles(g, *bf.walk(u))) candidates.push_back(std::move(c));
    for (auto &c : candidates)
        if (o.cycle_sign(c) == Sign::Minus) return c;
    throw Error(ErrorCode::OracleInconsistent, "walk comparisons report an improvement but no cycle is negative");
}

} // namespace detail

/// A negative simple cycle, or nullopt when every cycle is nonnegative.
inline std::optional<Cycle> ext_negative_cycle(const ExtendedOracle &o)
{
    const auto &g = o.graph();
    const std::size_t n = g.num_vertices();
    for (auto &comp : sccs(g)) {
        VertexSet alive(n, false);
        for (auto v : comp) alive[v] = true;
        detail::OracleBellmanFord bf(o, comp.front(), alive);
        for (std::size_t r = 1; r < comp.size(); ++r)
            if (bf.round().empty()) break;
        auto improved = bf.round();
        if (!improved.empty()) return detail::extract_negative_cycle(o, bf, improved.front());
    }
    return std::nullopt;
}

/// Lightest s-t walk: nullopt when t is unreachable, NegativeCycleReachable when unbounded below.
inline std::optional<std::vector<EdgeIndex>> ext_shortest_walk(const ExtendedOracle &o, VertexIndex s, VertexIndex t)
{
    const auto &g = o.graph();
    const std::size_t n = g.num_vertices();
    if (s >= n || t >= n) throw Error(ErrorCode::InvalidArgument, "vertex out of range");
    detail::OracleBellmanFord bf(o, s, VertexSet(n, true));
    for (std::size_t r = 1; r < n; ++r)
        if (bf.round().empty()) break;
    if (!bf.walk(t)) return std::nullopt;
    auto improved = bf.round();
    if (!improved.empty()) {
        VertexSet from(n, false);
        for (auto v : improved) from[v] = true;
        auto hit = reachable(g, from, EdgeSet(g.num_edges(), true));
        if (hit[t]) {
            auto c = detail::extract_negative_cycle(o, bf, improved.front());
            throw Error(ErrorCode::NegativeCycleReachable, "negative cycle " + CyclePattern::describe_key(c.key) + " lies on an s-t walk");
        }
    }
    return bf.walk(t);
}

} // namespace cyclepat
