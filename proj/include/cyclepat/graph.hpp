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

#include "cyclepat/common.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace cyclepat {

/// Directed multigraph with opaque string ids. Loops and parallel edges are allowed.
class Digraph {
public:
    VertexIndex add_vertex(const std::string &id)
    {
        if (vertex_lookup_.count(id)) throw Error(ErrorCode::DuplicateId, "duplicate vertex id '" + id + "'");
        VertexIndex v = vertex_ids_.size();
        vertex_ids_.push_back(id);
        vertex_lookup_.emplace(id, v);
        out_.emplace_back();
        in_.emplace_back();
        return v;
    }

    EdgeIndex add_edge(const std::string &id, const std::string &src, const std::string &dst)
    {
        auto s = find_vertex(src);
        auto t = find_vertex(dst);
        if (!s || !t)
            throw Error(ErrorCode::DanglingEndpoint,
                        "edge '" + id + "' has undeclared endpoint '" + (!s ? src : dst) + "'");
        return add_edge(id, *s, *t);
    }

    EdgeIndex add_edge(const std::string &id, VertexIndex s, VertexIndex t)
    {
        if (s >= num_vertices() || t >= num_vertices())
            throw Error(ErrorCode::DanglingEndpoint, "edge '" + id + "' has an endpoint out of range");
        if (edge_lookup_.count(id)) throw Error(ErrorCode::DuplicateId, "duplicate edge id '" + id + "'");
        EdgeIndex e = edge_ids_.size();
        edge_ids_.push_back(id);
        src_.push_back(s);
        dst_.push_back(t);
        edge_lookup_.emplace(id, e);
        out_[s].push_back(e);
        in_[t].push_back(e);
        return e;
    }

    std::size_t num_vertices() const noexcept { return vertex_ids_.size(); }
    std::size_t num_edges() const noexcept { return edge_ids_.size(); }

    const std::string &vertex_id(VertexIndex v) const { return vertex_ids_.at(v); }
    const std::string &edge_id(EdgeIndex e) const { return edge_ids_.at(e); }
    VertexIndex src(EdgeIndex e) const { return src_.at(e); }
    VertexIndex dst(EdgeIndex e) const { return dst_.at(e); }
    const std::vector<EdgeIndex> &out_edges(VertexIndex v) const { return out_.at(v); }
    const std::vector<EdgeIndex> &in_edges(VertexIndex v) const { return in_.at(v); }

    std::optional<VertexIndex> find_vertex(const std::string &id) const
    {
        auto it = vertex_lookup_.find(id);
        if (it == vertex_lookup_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<EdgeIndex> find_edge(const std::string &id) const
    {
        auto it = edge_lookup_.find(id);
        if (it == edge_lookup_.end()) return std::nullopt;
        return it->second;
    }

    VertexIndex vertex(const std::string &id) const
    {
        auto v = find_vertex(id);
        if (!v) throw Error(ErrorCode::InvalidArgument, "unknown vertex '" + id + "'");
        return *v;
    }

    EdgeIndex edge(const std::string &id) const
    {
        auto e = find_edge(id);
        if (!e) throw Error(ErrorCode::InvalidArgument, "unknown edge '" + id + "'");
        return *e;
    }

    /// Vertex indices sorted by id.
    std::vector<VertexIndex> vertices_by_id() const
    {
        std::vector<VertexIndex> order(num_vertices());
        std::iota(order.begin(), order.end(), VertexIndex{0});
        std::sort(order.begin(), order.end(),
                  [&](VertexIndex a, VertexIndex b) { return vertex_ids_[a] < vertex_ids_[b]; });
        return order;
    }

    /// Edge indices sorted by id.
    std::vector<EdgeIndex> edges_by_id() const
    {
        std::vector<EdgeIndex> order(num_edges());
        std::iota(order.begin(), order.end(), EdgeIndex{0});
        std::sort(order.begin(), order.end(),
                  [&](EdgeIndex a, EdgeIndex b) { return edge_ids_[a] < edge_ids_[b]; });
        return order;
    }

    bool operator==(const Digraph &o) const
    {
        return vertex_ids_ == o.vertex_ids_ && edge_ids_ == o.edge_ids_ && src_ == o.src_ && dst_ == o.dst_;
    }

private:
    std::vector<std::string> vertex_ids_;
    std::vector<std::string> edge_ids_;
    std::vector<VertexIndex> src_, dst_;
    std::vector<std::vector<EdgeIndex>> out_, in_;
    std::unordered_map<std::string, VertexIndex> vertex_lookup_;
    std::unordered_map<std::string, EdgeIndex> edge_lookup_;
};

enum class Player { Max, Min };

inline Player opponent(Player p) noexcept { return p == Player::Max ? Player::Min : Player::Max; }
inline const char *player_name(Player p) noexcept { return p == Player::Max ? "Max" : "Min"; }

/// A digraph whose vertices are split between Max and Min.
struct Arena {
    Digraph graph;
    std::vector<Player> owner;

    Arena() = default;
    Arena(Digraph g, std::vector<Player> owners) : graph(std::move(g)), owner(std::move(owners))
    {
        if (owner.size() != graph.num_vertices())
            throw Error(ErrorCode::DimensionMismatch, "owner map does not cover the vertices");
        for (VertexIndex v = 0; v < graph.num_vertices(); ++v)
            if (graph.out_edges(v).empty())
                throw Error(ErrorCode::NotAnArena, "vertex '" + graph.vertex_id(v) + "' has no outgoing edge");
    }

    std::size_t num_vertices() const noexcept { return graph.num_vertices(); }
    std::size_t num_edges() const noexcept { return graph.num_edges(); }
};

using VertexSet = std::vector<bool>;
using EdgeSet = std::vector<bool>;

inline std::vector<VertexIndex> members(const VertexSet &s)
{
    std::vector<VertexIndex> r;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i]) r.push_back(i);
    return r;
}

/// Vertex ids of a set, sorted by id.
inline std::vector<std::string> member_ids(const Digraph &g, const VertexSet &s)
{
    std::vector<std::string> r;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i]) r.push_back(g.vertex_id(i));
    std::sort(r.begin(), r.end());
    return r;
}

/// A simple directed cycle.
struct Cycle {
    std::vector<EdgeIndex> edges;       // sorted by index
    std::vector<EdgeIndex> traversal;   // walk order, starting at the least vertex id
    std::vector<VertexIndex> vertices;  // walk order, starting at the least vertex id
    std::vector<std::string> key;       // sorted edge ids

    std::size_t length() const noexcept { return edges.size(); }

    bool contains(EdgeIndex e) const { return std::binary_search(edges.begin(), edges.end(), e); }

    /// 0/1 characteristic vector over edge indices.
    std::vector<int> chi(std::size_t m) const
    {
        std::vector<int> x(m, 0);
        for (auto e : edges) x[e] = 1;
        return x;
    }

    bool operator==(const Cycle &o) const { return key == o.key; }
    bool operator<(const Cycle &o) const { return key < o.key; }

    /// Builds a cycle from an edge set; throws UnknownCycle if the set is not one simple cycle.
    static Cycle from_edges(const Digraph &g, std::vector<EdgeIndex> edge_set)
    {
        std::sort(edge_set.begin(), edge_set.end());
        auto fail = [&](const std::string &why) { return Error(ErrorCode::UnknownCycle, "not a simple cycle: " + why); };
        if (edge_set.empty()) throw fail("empty edge set");
        if (std::adjacent_find(edge_set.begin(), edge_set.end()) != edge_set.end()) throw fail("repeated edge");
        std::map<VertexIndex, EdgeIndex> next;
        std::map<VertexIndex, int> indeg;
        for (auto e : edge_set) {
            if (e >= g.num_edges()) throw fail("edge out of range");
            if (!next.emplace(g.src(e), e).second) throw fail("vertex with two outgoing edges");
            if (++indeg[g.dst(e)] > 1) throw fail("vertex with two incoming edges");
        }
        for (auto &[v, e] : next)
            if (!indeg.count(v)) throw fail("vertex without incoming edge");
        VertexIndex start = next.begin()->first;
        for (auto &[v, e] : next)
            if (g.vertex_id(v) < g.vertex_id(start)) start = v;
        Cycle c;
        c.edges = edge_set;
        VertexIndex v = start;
        do {
            EdgeIndex e = next.at(v);
            c.vertices.push_back(v);
            c.traversal.push_back(e);
            v = g.dst(e);
        } while (v != start && c.traversal.size() <= edge_set.size());
        if (c.traversal.size() != edge_set.size()) throw fail("edge set splits into several cycles");
        for (auto e : edge_set) c.key.push_back(g.edge_id(e));
        std::sort(c.key.begin(), c.key.end());
        return c;
    }

    static Cycle from_ids(const Digraph &g, const std::vector<std::string> &ids)
    {
        std::vector<EdgeIndex> es;
        for (auto &id : ids) {
            auto e = g.find_edge(id);
            if (!e) throw Error(ErrorCode::UnknownCycle, "unknown edge '" + id + "' in cycle");
            es.push_back(*e);
        }
        return from_edges(g, es);
    }
};

/// Tarjan SCCs restricted to `alive` vertices and edges between them.
/// Components come out sinks first; each component is sorted by vertex id.
inline std::vector<std::vector<VertexIndex>> sccs(const Digraph &g, const VertexSet &alive)
{
    const std::size_t n = g.num_vertices();
    const std::size_t undef = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, undef), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexIndex> stack;
    std::vector<std::vector<VertexIndex>> result;
    std::size_t counter = 0;

    // Iterative to keep deep graphs off the call stack.
    struct Frame { VertexIndex v; std::size_t next; };
    for (VertexIndex root : g.vertices_by_id()) {
        if (!alive[root] || index[root] != undef) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto &f = call.back();
            const auto &outs = g.out_edges(f.v);
            if (f.next < outs.size()) {
                VertexIndex u = g.dst(outs[f.next++]);
                if (!alive[u]) continue;
                if (index[u] == undef) {
                    index[u] = low[u] = counter++;
                    stack.push_back(u);
                    on_stack[u] = true;
                    call.push_back({u, 0});
                } else if (on_stack[u]) {
                    low[f.v] = std::min(low[f.v], index[u]);
                }
                continue;
            }
            VertexIndex v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<VertexIndex> comp;
                VertexIndex u;
                do {
                    u = stack.back();
                    stack.pop_back();
                    on_stack[u] = false;
                    comp.push_back(u);
                } while (u != v);
                std::sort(comp.begin(), comp.end(),
                          [&](VertexIndex a, VertexIndex b) { return g.vertex_id(a) < g.vertex_id(b); });
                result.push_back(std::move(comp));
            }
        }
    }
    return result;
}

inline std::vector<std::vector<VertexIndex>> sccs(const Digraph &g)
{
    return sccs(g, VertexSet(g.num_vertices(), true));
}

inline bool is_strongly_connected(const Digraph &g)
{
    return g.num_vertices() > 0 && sccs(g).size() == 1;
}

/// Checks well-formedness and optionally strong connectivity.
/// Ids are checked at construction, so only the connectivity flag can fail here.
inline void validate(const Digraph &g, bool require_strongly_connected)
{
    for (EdgeIndex e = 0; e < g.num_edges(); ++e)
        if (g.src(e) >= g.num_vertices() || g.dst(e) >= g.num_vertices())
            throw Error(ErrorCode::DanglingEndpoint, "edge '" + g.edge_id(e) + "' has a dangling endpoint");
    if (require_strongly_connected && !is_strongly_connected(g))
        throw Error(ErrorCode::NotStronglyConnected, "graph is not strongly connected");
}

/// Least superset of `target` from which `player` forces a visit to it, within `alive`.
inline VertexSet attractor(const Arena &arena, const VertexSet &target, Player player, const VertexSet &alive)
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
            if (arena.owner[v] == player || --remaining[v] == 0) {
                attr[v] = true;
                queue.push_back(v);
            }
        }
    }
    return attr;
}

inline VertexSet attractor(const Arena &arena, const VertexSet &target, Player player)
{
    return attractor(arena, target, player, VertexSet(arena.num_vertices(), true));
}

/// All simple cycles, sorted by key. Johnson's algorithm with parallel edges as distinct successors.
inline std::vector<Cycle> enumerate_cycles(const Digraph &g, std::size_t budget = kDefaultCycleBudget,
                                           const EdgeSet *edge_filter = nullptr)
{
    const std::size_t n = g.num_vertices();
    auto edge_ok = [&](EdgeIndex e) { return !edge_filter || (*edge_filter)[e]; };
    std::vector<VertexIndex> order = g.vertices_by_id();
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;

    std::vector<std::vector<EdgeIndex>> found;
    std::vector<bool> blocked(n, false);
    std::vector<std::vector<VertexIndex>> blist(n);
    std::vector<EdgeIndex> path;
    VertexSet in_comp(n, false);
    VertexIndex start = 0;

    std::function<void(VertexIndex)> unblock = [&](VertexIndex u) {
        blocked[u] = false;
        auto pending = std::move(blist[u]);
        blist[u].clear();
        for (auto w : pending)
            if (blocked[w]) unblock(w);
    };

    std::function<bool(VertexIndex)> circuit = [&](VertexIndex v) -> bool {
        bool closed = false;
        blocked[v] = true;
        for (auto e : g.out_edges(v)) {
            if (!edge_ok(e)) continue;
            VertexIndex w = g.dst(e);
            if (!in_comp[w]) continue;
            if (w == start) {
                path.push_back(e);
                found.push_back(path);
                path.pop_back();
                if (found.size() > budget)
                    throw Error(ErrorCode::CycleBudgetExceeded,
                                "more than " + std::to_string(budget) + " cycles");
                closed = true;
            } else if (!blocked[w]) {
                path.push_back(e);
                if (circuit(w)) closed = true;
                path.pop_back();
            }
        }
        if (closed) {
            unblock(v);
        } else {
            for (auto e : g.out_edges(v)) {
                if (!edge_ok(e)) continue;
                VertexIndex w = g.dst(e);
                if (!in_comp[w]) continue;
                auto &bl = blist[w];
                if (std::find(bl.begin(), bl.end(), v) == bl.end()) bl.push_back(v);
            }
        }
        return closed;
    };

    // Components are computed on the filtered edges.
    Digraph filtered;
    if (edge_filter) {
        for (VertexIndex v = 0; v < n; ++v) filtered.add_vertex(g.vertex_id(v));
        for (EdgeIndex e = 0; e < g.num_edges(); ++e)
            if (edge_ok(e)) filtered.add_edge(g.edge_id(e), g.src(e), g.dst(e));
    }
    const Digraph &scc_graph = edge_filter ? filtered : g;

    for (std::size_t i = 0; i < n; ++i) {
        start = order[i];
        // Strong component of `start` within the subgraph induced by vertices ranked >= i.
        VertexSet alive(n, false);
        for (std::size_t j = i; j < n; ++j) alive[order[j]] = true;
        std::fill(in_comp.begin(), in_comp.end(), false);
        for (auto &comp : sccs(scc_graph, alive))
            if (std::find(comp.begin(), comp.end(), start) != comp.end())
                for (auto v : comp) in_comp[v] = true;
        for (VertexIndex v = 0; v < n; ++v) {
            blocked[v] = false;
            blist[v].clear();
        }
        circuit(start);
    }

    std::vector<Cycle> cycles;
    cycles.reserve(found.size());
    for (auto &es : found) cycles.push_back(Cycle::from_edges(g, es));
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

/// Rank over the rationals of the characteristic vectors of all cycles.
inline std::size_t cycle_space_rank(const Digraph &g, std::size_t budget = kDefaultCycleBudget)
{
    validate(g, true);
    const std::size_t m = g.num_edges();
    auto cycles = enumerate_cycles(g, budget);
    // Incremental echelon basis; pivot[c] = row index holding the pivot in column c.
    std::vector<std::vector<Rational>> basis;
    std::vector<std::size_t> pivot_col;
    for (const auto &c : cycles) {
        std::vector<Rational> x(m, 0);
        for (auto e : c.edges) x[e] = 1;
        for (std::size_t r = 0; r < basis.size(); ++r) {
            std::size_t p = pivot_col[r];
            if (x[p] == 0) continue;
            Rational f = x[p];
            for (std::size_t j = 0; j < m; ++j)
                if (basis[r][j] != 0) x[j] -= f * basis[r][j];
        }
        std::size_t p = 0;
        while (p < m && x[p] == 0) ++p;
        if (p == m) continue;
        Rational inv = 1 / x[p];
        for (auto &v : x) v *= inv;
        basis.push_back(std::move(x));
        pivot_col.push_back(p);
    }
    return basis.size();
}

/// Edge set E_sigma: all Min edges plus the chosen edge at each Max vertex.
struct StrategySubgraph {
    const Arena *arena = nullptr;
    std::vector<std::optional<EdgeIndex>> max_choice;

    StrategySubgraph(const Arena &a, std::vector<std::optional<EdgeIndex>> choice)
        : arena(&a), max_choice(std::move(choice))
    {
        if (max_choice.size() != a.num_vertices())
            throw Error(ErrorCode::DimensionMismatch, "strategy does not cover the vertices");
        for (VertexIndex v = 0; v < a.num_vertices(); ++v) {
            if (a.owner[v] != Player::Max) continue;
            if (!max_choice[v] || a.graph.src(*max_choice[v]) != v)
                throw Error(ErrorCode::InvalidArgument,
                            "strategy choice at '" + a.graph.vertex_id(v) + "' does not leave it");
        }
    }

    EdgeSet edges() const
    {
        const auto &g = arena->graph;
        EdgeSet in(g.num_edges(), false);
        for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
            VertexIndex v = g.src(e);
            in[e] = arena->owner[v] == Player::Min || max_choice[v] == e;
        }
        return in;
    }
};

/// Vertices reachable from `from` using edges in `edges`.
inline VertexSet reachable(const Digraph &g, const VertexSet &from, const EdgeSet &edges)
{
    VertexSet seen = from;
    std::vector<VertexIndex> stack = members(from);
    while (!stack.empty()) {
        VertexIndex v = stack.back();
        stack.pop_back();
        for (auto e : g.out_edges(v)) {
            if (!edges[e] || seen[g.dst(e)]) continue;
            seen[g.dst(e)] = true;
            stack.push_back(g.dst(e));
        }
    }
    return seen;
}

/// True if the subgraph on `edges` has no directed cycle.
inline bool is_acyclic(const Digraph &g, const EdgeSet &edges)
{
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> indeg(n, 0);
    for (EdgeIndex e = 0; e < g.num_edges(); ++e)
        if (edges[e]) ++indeg[g.dst(e)];
    std::vector<VertexIndex> q;
    for (VertexIndex v = 0; v < n; ++v)
        if (indeg[v] == 0) q.push_back(v);
    std::size_t seen = 0;
    while (!q.empty()) {
        VertexIndex v = q.back();
        q.pop_back();
        ++seen;
        for (auto e : g.out_edges(v))
            if (edges[e] && --indeg[g.dst(e)] == 0) q.push_back(g.dst(e));
    }
    return seen == n;
}

inline bool is_simple(const Digraph &g)
{
    std::map<std::pair<VertexIndex, VertexIndex>, int> seen;
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
        if (g.src(e) == g.dst(e)) return false;
        if (++seen[{g.src(e), g.dst(e)}] > 1) return false;
    }
    return true;
}

} // namespace cyclepat
