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

#include "cyclepat/lp.hpp"
#include "cyclepat/pattern.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <variant>

namespace cyclepat {

/// One row per cycle: +chi for positive, -chi for negative cycles, chi as equality for zero cycles.
struct RealizationCone {
    Digraph graph;
    std::vector<SignedCycle> cycles;
    RationalMatrixSystem system;
    std::vector<std::size_t> strict_row_cycle; // strict row -> index into cycles
    std::vector<std::size_t> eq_row_cycle;     // equality row -> index into cycles
};

inline RealizationCone build_cone(const CyclePattern &pattern, std::size_t budget = kDefaultCycleBudget)
{
    RealizationCone cone;
    cone.graph = pattern.graph();
    cone.cycles = pattern.signed_cycles(budget);
    const std::size_t m = cone.graph.num_edges();
    cone.system.num_vars = m;
    auto order = cone.graph.edges_by_id();
    cone.system.tie_rank.assign(m, 0);
    for (std::size_t r = 0; r < m; ++r) cone.system.tie_rank[order[r]] = r;
    for (std::size_t i = 0; i < cone.cycles.size(); ++i) {
        const auto &sc = cone.cycles[i];
        std::vector<Rational> row(m, 0);
        Rational v = sc.sign == Sign::Minus ? -1 : 1;
        for (auto e : sc.cycle.edges) row[e] = v;
        if (sc.sign == Sign::Zero) {
            cone.system.eq_rows.push_back(std::move(row));
            cone.eq_row_cycle.push_back(i);
        } else {
            cone.system.strict_rows.push_back(std::move(row));
            cone.strict_row_cycle.push_back(i);
        }
    }
    return cone;
}

struct WitnessTerm {
    Cycle cycle;
    Integer multiplicity;
    Sign sign = Sign::Zero;
};

/// Opposing pair: equal characteristic-vector sums, plus side signs in {0,+}, minus side in {0,-}.
struct Witness {
    std::vector<WitnessTerm> plus, minus;

    Integer size() const
    {
        Integer s = 0;
        for (auto &t : plus) s += t.multiplicity;
        for (auto &t : minus) s += t.multiplicity;
        return s;
    }

    std::size_t distinct_cycles() const
    {
        std::set<CycleKey> keys;
        for (auto &t : plus) keys.insert(t.cycle.key);
        for (auto &t : minus) keys.insert(t.cycle.key);
        return keys.size();
    }
};

struct Realization {
    WeightFn w;
};

struct NotRealizable {
    Witness witness;
};

using RealizabilityResult = std::variant<Realization, NotRealizable>;

inline bool verify_witness(const Digraph &g, const CyclePattern &pattern, const Witness &wit)
{
    if (wit.plus.empty() || wit.minus.empty()) return false;
    std::vector<Integer> balance(g.num_edges(), 0);
    bool nonzero = false;
    auto side = [&](const std::vector<WitnessTerm> &terms, Sign forbidden, int dir) {
        for (auto &t : terms) {
            Cycle c = Cycle::from_edges(g, t.cycle.edges);
            if (c.key != t.cycle.key) throw Error(ErrorCode::UnknownCycle, "witness cycle does not match the graph");
            if (t.multiplicity < 1) return false;
            Sign s = pattern.sign_of(c);
            if (s == forbidden) return false;
            if (s != Sign::Zero) nonzero = true;
            for (auto e : c.edges) balance[e] += dir * t.multiplicity;
        }
        return true;
    };
    if (!side(wit.plus, Sign::Minus, 1) || !side(wit.minus, Sign::Plus, -1)) return false;
    for (auto &b : balance)
        if (b != 0) return false;
    return nonzero;
}

inline std::size_t weak_components(const Digraph &g)
{
    std::vector<std::size_t> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    std::size_t comps = g.num_vertices();
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
        auto a = find(g.src(e)), b = find(g.dst(e));
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return comps;
}

/// Checks max|w| <= (n+1)^(d/2) with d = m - n + (number of weak components), exactly.
inline bool within_hadamard_bound(const Digraph &g, const WeightFn &w)
{
    const std::size_t d = g.num_edges() + weak_components(g) - g.num_vertices();
    Integer rhs;
    mpz_ui_pow_ui(rhs.get_mpz_t(), g.num_vertices() + 1, d);
    Rational l = w.linf();
    return l * l <= Rational(rhs);
}

inline Integer hadamard_floor(const Digraph &g)
{
    const std::size_t d = g.num_edges() + weak_components(g) - g.num_vertices();
    Integer sq;
    mpz_ui_pow_ui(sq.get_mpz_t(), g.num_vertices() + 1, d);
    Integer r;
    mpz_sqrt(r.get_mpz_t(), sq.get_mpz_t());
    return r;
}

namespace detail {

/// Edges that carry a variable after fixing a spanning forest to zero.
inline std::vector<EdgeIndex> reduced_columns(const RealizationCone &cone)
{
    const auto &g = cone.graph;
    std::vector<std::size_t> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    std::vector<bool> on_cycle(g.num_edges(), false);
    for (auto &sc : cone.cycles)
        for (auto e : sc.cycle.edges) on_cycle[e] = true;
    std::vector<EdgeIndex> cols;
    for (auto e : g.edges_by_id()) {
        if (!on_cycle[e]) continue;
        auto a = find(g.src(e)), b = find(g.dst(e));
        if (a != b) {
            parent[a] = b;
            continue;
        }
        cols.push_back(e);
    }
    std::sort(cols.begin(), cols.end());
    return cols;
}

inline RationalMatrixSystem restrict_columns(const RationalMatrixSystem &sys, const std::vector<EdgeIndex> &cols)
{
    RationalMatrixSystem r;
    r.num_vars = cols.size();
    auto take = [&](const std::vector<Rational> &row) {
        std::vector<Rational> out;
        out.reserve(cols.size());
        for (auto c : cols) out.push_back(row[c]);
        return out;
    };
    for (auto &row : sys.strict_rows) r.strict_rows.push_back(take(row));
    for (auto &row : sys.eq_rows) r.eq_rows.push_back(take(row));
    r.box = sys.box;
    if (!sys.tie_rank.empty())
        for (auto c : cols) r.tie_rank.push_back(sys.tie_rank[c]);
    return r;
}

inline WeightFn primitive_integral(const std::vector<Rational> &w)
{
    Integer l = lcm_of_denominators(w);
    std::vector<Integer> ints;
    Integer g = 0;
    for (auto &q : w) {
        Rational s = q * l;
        ints.push_back(s.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
    }
    std::vector<Rational> out;
    for (auto &z : ints) out.emplace_back(g > 0 ? Integer(z / g) : z);
    return WeightFn(std::move(out));
}

inline Witness witness_from_multipliers(const RealizationCone &cone, const std::vector<Integer> &y,
                                        const std::vector<Integer> &z)
{
    Witness wit;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == 0) continue;
        const auto &sc = cone.cycles[cone.strict_row_cycle[i]];
        (sc.sign == Sign::Plus ? wit.plus : wit.minus).push_back({sc.cycle, y[i], sc.sign});
    }
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] == 0) continue;
        const auto &sc = cone.cycles[cone.eq_row_cycle[i]];
        if (z[i] > 0)
            wit.plus.push_back({sc.cycle, z[i], Sign::Zero});
        else
            wit.minus.push_back({sc.cycle, Integer(-z[i]), Sign::Zero});
    }
    return wit;
}

inline CyclePattern cone_pattern(const RealizationCone &cone)
{
    std::map<CycleKey, Sign> t;
    for (auto &sc : cone.cycles) t.emplace(sc.cycle.key, sc.sign);
    return CyclePattern::table(cone.graph, std::move(t), cone.cycles.size() + 1);
}

} // namespace detail

/// Integral realization within the Hadamard bound, or a verified opposing pair.
inline RealizabilityResult check_realizable(const RealizationCone &cone)
{
    const auto &sys = cone.system;
    const std::size_t m = cone.graph.num_edges();
    if (sys.strict_rows.empty()) return Realization{WeightFn::constant(m, 0)};

    auto cols = detail::reduced_columns(cone);
    RationalMatrixSystem reduced = detail::restrict_columns(sys, cols);
    reduced.box.reset();
    auto cert = lp_feasible(reduced);
    if (auto *pt = std::get_if<LpPoint>(&cert)) {
        std::vector<Rational> full(m, 0);
        for (std::size_t k = 0; k < cols.size(); ++k) full[cols[k]] = pt->w[k];
        WeightFn w = detail::primitive_integral(full);
        if (!verify_point(sys, w.values, false)) throw std::logic_error("realization fails the cone rows");
        if (!within_hadamard_bound(cone.graph, w)) throw std::logic_error("realization exceeds the Hadamard bound");
        return Realization{std::move(w)};
    }
    const auto &inf = std::get<LpInfeasible>(cert);
    if (!verify_farkas(sys, inf.y, inf.z)) throw std::logic_error("reduced certificate does not lift");
    Witness wit = detail::witness_from_multipliers(cone, inf.y, inf.z);
    return NotRealizable{std::move(wit)};
}

inline RealizabilityResult check_realizable(const CyclePattern &pattern, std::size_t budget = kDefaultCycleBudget)
{
    return check_realizable(build_cone(pattern, budget));
}

/// Witness of least total multiplicity, from an integer program over cycle multiplicities.
inline Witness minimal_witness(const RealizationCone &cone)
{
    const auto &sys = cone.system;
    const std::size_t m = cone.graph.num_edges();
    const std::size_t na = sys.strict_rows.size(), nb = sys.eq_rows.size();
    // Variables: y (na), z+ (nb), z- (nb).
    RationalMatrixSystem ilp;
    ilp.num_vars = na + 2 * nb;
    std::vector<Rational> ones(ilp.num_vars, 0);
    for (std::size_t i = 0; i < na; ++i) ones[i] = 1;
    ilp.strict_rows.push_back(ones);
    for (std::size_t e = 0; e < m; ++e) {
        std::vector<Rational> row(ilp.num_vars, 0);
        for (std::size_t i = 0; i < na; ++i) row[i] = sys.strict_rows[i][e];
        for (std::size_t i = 0; i < nb; ++i) {
            row[na + i] = sys.eq_rows[i][e];
            row[na + nb + i] = -sys.eq_rows[i][e];
        }
        ilp.eq_rows.push_back(std::move(row));
    }
    std::map<std::size_t, Integer> lower;
    for (std::size_t j = 0; j < ilp.num_vars; ++j) lower[j] = 0;
    std::vector<Rational> objective(ilp.num_vars, 1);
    auto opt = ilp_minimize(objective, ilp, lower);
    if (!opt) throw Error(ErrorCode::IsRealizable, "pattern is realizable; no witness exists");
    std::vector<Integer> y(opt->x.begin(), opt->x.begin() + static_cast<long>(na));
    std::vector<Integer> z(nb);
    for (std::size_t i = 0; i < nb; ++i) z[i] = opt->x[na + i] - opt->x[na + nb + i];
    Witness wit = detail::witness_from_multipliers(cone, y, z);
    if (!verify_witness(cone.graph, detail::cone_pattern(cone), wit))
        throw std::logic_error("minimal witness failed verification");
    return wit;
}

struct MinimalRealization {
    Integer k;
    WeightFn w;
    std::size_t ilp_calls = 0;
};

/// Least k such that an integer realization with max|w(e)| <= k exists; binary search over the ILP.
inline MinimalRealization minimal_linf(const RealizationCone &cone)
{
    auto first = check_realizable(cone);
    auto *real = std::get_if<Realization>(&first);
    if (!real) throw Error(ErrorCode::NotRealizablePattern, "pattern is not realizable");
    MinimalRealization out;
    const std::size_t m = cone.graph.num_edges();
    if (cone.system.strict_rows.empty()) {
        out.k = 0;
        out.w = WeightFn::constant(m, 0);
        return out;
    }
    Integer hi = hadamard_floor(cone.graph);
    Integer norm = real->w.linf().get_num();
    if (norm < hi) hi = norm;
    Integer lo = 1;
    std::optional<std::vector<Integer>> best;
    auto feasible_at = [&](const Integer &k) {
        RationalMatrixSystem sys = cone.system;
        sys.box = k;
        ++out.ilp_calls;
        return ilp_feasible(sys);
    };
    while (lo < hi) {
        Integer mid = (lo + hi) / 2;
        auto r = feasible_at(mid);
        if (r) {
            hi = mid;
            best = std::move(r);
        } else {
            lo = mid + 1;
        }
    }
    if (!best) best = feasible_at(lo);
    if (!best) throw std::logic_error("no integer realization at the upper limit");
    // lo-1 was refuted by the search unless lo == 1, where k = 0 fails because A is nonempty.
    out.k = lo;
    std::vector<Rational> w;
    for (auto &z : *best) w.emplace_back(z);
    out.w = WeightFn(std::move(w));
    if (out.w.linf() > Rational(out.k)) throw std::logic_error("minimal realization exceeds its bound");
    return out;
}

} // namespace cyclepat
