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

#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace cyclepat {

/// Exact rational weight per edge index.
struct WeightFn {
    std::vector<Rational> values;

    WeightFn() = default;
    explicit WeightFn(std::vector<Rational> v) : values(std::move(v)) {}

    static WeightFn constant(std::size_t m, const Rational &c) { return WeightFn(std::vector<Rational>(m, c)); }

    template <typename Int>
    static WeightFn from_ints(const std::vector<Int> &v)
    {
        std::vector<Rational> w;
        w.reserve(v.size());
        for (auto x : v) w.emplace_back(static_cast<long>(x));
        return WeightFn(std::move(w));
    }

    std::size_t size() const noexcept { return values.size(); }
    const Rational &operator[](EdgeIndex e) const { return values.at(e); }
    Rational &operator[](EdgeIndex e) { return values.at(e); }

    Rational of(const Cycle &c) const
    {
        Rational s = 0;
        for (auto e : c.edges) s += values.at(e);
        return s;
    }

    bool integral() const
    {
        for (auto &q : values)
            if (!is_integral(q)) return false;
        return true;
    }

    Rational linf() const
    {
        Rational best = 0;
        for (auto &q : values)
            if (abs(q) > best) best = abs(q);
        return best;
    }

    WeightFn scaled(const Rational &lambda) const
    {
        WeightFn r(values);
        for (auto &q : r.values) q *= lambda;
        return r;
    }

    bool operator==(const WeightFn &o) const { return values == o.values; }
};

/// Nonnegative integer priority per edge index.
struct PriorityFn {
    std::vector<unsigned long> values;

    PriorityFn() = default;
    explicit PriorityFn(std::vector<unsigned long> v) : values(std::move(v)) {}
    template <typename Int>
    explicit PriorityFn(const std::vector<Int> &v) : values(v.begin(), v.end()) {}

    std::size_t size() const noexcept { return values.size(); }
    unsigned long operator[](EdgeIndex e) const { return values.at(e); }

    unsigned long max_on(const Cycle &c) const
    {
        unsigned long best = 0;
        for (auto e : c.edges) best = std::max(best, values.at(e));
        return best;
    }

    bool operator==(const PriorityFn &o) const { return values == o.values; }
};

inline Sign weight_sign(const WeightFn &w, const Cycle &c) { return sign_of(w.of(c)); }
inline Sign parity_sign(const PriorityFn &p, const Cycle &c) { return p.max_on(c) % 2 == 0 ? Sign::Plus : Sign::Minus; }

struct SignedCycle {
    Cycle cycle;
    Sign sign;
};

using CycleKey = std::vector<std::string>;

struct ExplicitTable {
    std::map<CycleKey, Sign> signs;
};
struct WeightInduced {
    WeightFn w;
};
struct ParityInduced {
    PriorityFn p;
};

/// Total map from the cycles of a graph to signs.
class CyclePattern {
public:
    using Backing = std::variant<ExplicitTable, WeightInduced, ParityInduced>;

    /// Table backing; checked for totality against the enumerated cycles.
    static CyclePattern table(const Digraph &g, std::map<CycleKey, Sign> signs,
                              std::size_t budget = kDefaultCycleBudget)
    {
        auto cycles = enumerate_cycles(g, budget);
        std::size_t hit = 0;
        for (auto &c : cycles) {
            if (!signs.count(c.key))
                throw Error(ErrorCode::PatternNotTotal, "pattern has no sign for cycle " + describe_key(c.key));
            ++hit;
        }
        if (hit != signs.size()) {
            for (auto &[k, s] : signs) {
                Cycle::from_ids(g, k); // throws UnknownCycle for non-cycles
            }
            throw Error(ErrorCode::UnknownCycle, "pattern lists a duplicate or unknown cycle");
        }
        return CyclePattern(g, ExplicitTable{std::move(signs)});
    }

    static CyclePattern weight_induced(const Digraph &g, WeightFn w)
    {
        if (w.size() != g.num_edges()) throw Error(ErrorCode::DimensionMismatch, "weight function size differs from edge count");
        return CyclePattern(g, WeightInduced{std::move(w)});
    }

    static CyclePattern parity_induced(const Digraph &g, PriorityFn p)
    {
        if (p.size() != g.num_edges()) throw Error(ErrorCode::DimensionMismatch, "priority function size differs from edge count");
        return CyclePattern(g, ParityInduced{std::move(p)});
    }

    const Digraph &graph() const noexcept { return graph_; }
    const Backing &backing() const noexcept { return backing_; }
    bool is_table() const noexcept { return std::holds_alternative<ExplicitTable>(backing_); }

    Sign sign_of(const Cycle &c) const
    {
        check_cycle(c);
        if (auto *t = std::get_if<ExplicitTable>(&backing_)) {
            auto it = t->signs.find(c.key);
            if (it == t->signs.end()) throw Error(ErrorCode::UnknownCycle, "no sign for cycle " + describe_key(c.key));
            return it->second;
        }
        if (auto *w = std::get_if<WeightInduced>(&backing_)) return weight_sign(w->w, c);
        return parity_sign(std::get<ParityInduced>(backing_).p, c);
    }

    /// Every cycle with its sign, in enumeration order.
    std::vector<SignedCycle> signed_cycles(std::size_t budget = kDefaultCycleBudget) const
    {
        std::vector<SignedCycle> r;
        for (auto &c : enumerate_cycles(graph_, budget)) {
            Sign s = sign_of(c);
            r.push_back({std::move(c), s});
        }
        return r;
    }

    static std::string describe_key(const CycleKey &k)
    {
        std::string s = "{";
        for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + k[i];
        return s + "}";
    }

private:
    CyclePattern(const Digraph &g, Backing b) : graph_(g), backing_(std::move(b)) {}

    void check_cycle(const Cycle &c) const
    {
        if (c.edges.size() != c.key.size()) throw Error(ErrorCode::UnknownCycle, "malformed cycle");
        for (std::size_t i = 0; i < c.edges.size(); ++i)
            if (c.edges[i] >= graph_.num_edges())
                throw Error(ErrorCode::UnknownCycle, "cycle " + describe_key(c.key) + " is not in the graph");
        CycleKey ids;
        for (auto e : c.edges) ids.push_back(graph_.edge_id(e));
        std::sort(ids.begin(), ids.end());
        if (ids != c.key) throw Error(ErrorCode::UnknownCycle, "cycle " + describe_key(c.key) + " is not in the graph");
    }

    friend CyclePattern materialize(const CyclePattern &, std::size_t);

    Digraph graph_;
    Backing backing_;
};

inline Sign sign_of(const CyclePattern &pattern, const Cycle &c) { return pattern.sign_of(c); }

/// Converts any backing to an explicit table over all cycles.
inline CyclePattern materialize(const CyclePattern &pattern, std::size_t budget = kDefaultCycleBudget)
{
    ExplicitTable t;
    for (auto &sc : pattern.signed_cycles(budget)) t.signs.emplace(sc.cycle.key, sc.sign);
    return CyclePattern(pattern.graph(), std::move(t));
}

inline bool same_pattern(const CyclePattern &a, const CyclePattern &b, std::size_t budget = kDefaultCycleBudget)
{
    if (!(a.graph() == b.graph())) return false;
    for (auto &c : enumerate_cycles(a.graph(), budget))
        if (a.sign_of(c) != b.sign_of(c)) return false;
    return true;
}

/// First cycle, in enumeration order, whose induced signs differ.
inline std::optional<Cycle> distinguish(const WeightFn &w1, const WeightFn &w2, const Digraph &g,
                                        std::size_t budget = kDefaultCycleBudget)
{
    if (w1.size() != g.num_edges() || w2.size() != g.num_edges())
        throw Error(ErrorCode::DimensionMismatch, "weight function size differs from edge count");
    for (auto &c : enumerate_cycles(g, budget))
        if (weight_sign(w1, c) != weight_sign(w2, c)) return c;
    return std::nullopt;
}

/// First cycle, in enumeration order, of total weight zero.
inline std::optional<Cycle> zero_weight_cycle(const Digraph &g, const WeightFn &w,
                                              std::size_t budget = kDefaultCycleBudget)
{
    if (w.size() != g.num_edges()) throw Error(ErrorCode::DimensionMismatch, "weight function size differs from edge count");
    for (auto &c : enumerate_cycles(g, budget))
        if (w.of(c) == 0) return c;
    return std::nullopt;
}

} // namespace cyclepat
