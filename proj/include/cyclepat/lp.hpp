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
#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace cyclepat {

enum class Sense { GE, LE, EQ };

struct LpRow {
    std::vector<Rational> coef;
    Sense sense = Sense::GE;
    Rational rhs = 0;
};

/// General LP: bounded or free variables, mixed row senses, optional minimization objective.
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<std::optional<Rational>> lower, upper;
    std::vector<LpRow> rows;
    std::vector<Rational> objective; // empty: pure feasibility

    explicit LinearProgram(std::size_t n = 0) : num_vars(n), lower(n), upper(n) {}
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> x;
    Rational value = 0;
    // Phase-1 multipliers over the original rows when infeasible; only a Farkas certificate
    // for the rows alone when no variable carries a finite bound.
    std::vector<Rational> farkas;
    std::size_t pivots = 0;
};

namespace detail {

/// Dense exact tableau; Bland's rule.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : m_(rows), n_(cols), a_(rows, std::vector<Rational>(cols + 1)), obj_(cols + 1), basis_(rows, 0) {}

    Rational &at(std::size_t i, std::size_t j) { return a_[i][j]; }
    Rational &rhs(std::size_t i) { return a_[i][n_]; }
    Rational &cost(std::size_t j) { return obj_[j]; }
    const Rational &cost(std::size_t j) const { return obj_[j]; }
    Rational value() const { return -obj_[n_]; }
    std::size_t &basic(std::size_t i) { return basis_[i]; }
    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }

    /// Loads reduced costs for cost vector c given the current basis.
    void price(const std::vector<Rational> &c)
    {
        for (std::size_t j = 0; j <= n_; ++j) obj_[j] = j < n_ ? c[j] : Rational(0);
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational &cb = c[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j <= n_; ++j)
                if (a_[i][j] != 0) obj_[j] -= cb * a_[i][j];
        }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        auto &row = a_[r];
        Rational inv = 1 / row[c];
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j <= n_; ++j) {
            if (row[j] == 0) continue;
            row[j] *= inv;
            nz.push_back(j);
        }
        auto eliminate = [&](std::vector<Rational> &target) {
            if (target[c] == 0) return;
            Rational f = target[c];
            for (auto j : nz) target[j] -= f * row[j];
        };
        for (std::size_t i = 0; i < m_; ++i)
            if (i != r) eliminate(a_[i]);
        eliminate(obj_);
        basis_[r] = c;
        ++pivots_;
    }

    /// Minimizes over columns with allowed[j]; returns false when unbounded.
    bool run(const std::vector<bool> &allowed)
    {
        for (;;) {
            std::size_t enter = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (allowed[j] && obj_[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == n_) return true;
            std::size_t leave = m_;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (a_[i][enter] <= 0) continue;
                Rational ratio = a_[i][n_] / a_[i][enter];
                if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) return false;
            pivot(leave, enter);
        }
    }

    std::size_t pivots() const { return pivots_; }

private:
    std::size_t m_, n_;
    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> obj_;
    std::vector<std::size_t> basis_;
    std::size_t pivots_ = 0;
};

/// LP restricted to an active subset of rows, converted to standard form and solved by two-phase simplex.
inline LpSolution solve_subset(const LinearProgram &lp, const std::vector<std::optional<Rational>> &lower,
                               const std::vector<std::optional<Rational>> &upper, const std::vector<bool> &active)
{
    const std::size_t nv = lp.num_vars;
    LpSolution out;
    out.farkas.assign(lp.rows.size(), 0);

    // Column map: x_j = shift_j + sum over its columns of sign * x'.
    struct Col { std::size_t var; int sign; };
    std::vector<Col> cols;
    std::vector<Rational> shift(nv, 0);
    std::vector<std::pair<std::size_t, Rational>> bound_rows; // column, capacity
    for (std::size_t j = 0; j < nv; ++j) {
        const auto &lo = lower[j];
        const auto &hi = upper[j];
        if (lo && hi && *hi < *lo) return out; // empty box; no row certificate
        if (lo) {
            shift[j] = *lo;
            cols.push_back({j, 1});
            if (hi) bound_rows.emplace_back(cols.size() - 1, *hi - *lo);
        } else if (hi) {
            shift[j] = *hi;
            cols.push_back({j, -1});
        } else {
            cols.push_back({j, 1});
            cols.push_back({j, -1});
        }
    }
    const std::size_t nstruct = cols.size();

    struct StdRow { std::vector<std::pair<std::size_t, Rational>> coef; Rational rhs; int slack; int flip; std::size_t origin; };
    std::vector<StdRow> srows;
    const std::size_t none = static_cast<std::size_t>(-1);
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
        if (!active[r]) continue;
        const auto &row = lp.rows[r];
        StdRow s;
        s.rhs = row.rhs;
        for (std::size_t j = 0; j < nv; ++j)
            if (row.coef[j] != 0) s.rhs -= row.coef[j] * shift[j];
        for (std::size_t c = 0; c < nstruct; ++c) {
            const Rational &a = row.coef[cols[c].var];
            if (a != 0) s.coef.emplace_back(c, cols[c].sign > 0 ? a : Rational(-a));
        }
        s.slack = row.sense == Sense::GE ? -1 : (row.sense == Sense::LE ? 1 : 0);
        s.flip = 1;
        s.origin = r;
        srows.push_back(std::move(s));
    }
    for (auto &[c, cap] : bound_rows) {
        StdRow s;
        s.coef.emplace_back(c, Rational(1));
        s.rhs = cap;
        s.slack = 1;
        s.flip = 1;
        s.origin = none;
        srows.push_back(std::move(s));
    }
    for (auto &s : srows) {
        if (s.rhs < 0) {
            s.flip = -1;
            s.rhs = -s.rhs;
            s.slack = -s.slack;
            for (auto &[c, a] : s.coef) a = -a;
        }
    }

    const std::size_t m = srows.size();
    std::size_t nslack = 0;
    for (auto &s : srows)
        if (s.slack != 0) ++nslack;
    std::size_t nart = 0;
    for (auto &s : srows)
        if (s.slack != 1) ++nart;
    const std::size_t ncols = nstruct + nslack + nart;
    Tableau t(m, ncols);
    std::vector<Rational> phase1(ncols, 0);
    std::vector<std::size_t> unit_col(m);
    std::vector<bool> is_art(ncols, false);
    std::size_t next_slack = nstruct, next_art = nstruct + nslack;
    for (std::size_t i = 0; i < m; ++i) {
        auto &s = srows[i];
        for (auto &[c, a] : s.coef) t.at(i, c) = a;
        t.rhs(i) = s.rhs;
        if (s.slack != 0) {
            t.at(i, next_slack) = s.slack;
            if (s.slack == 1) unit_col[i] = next_slack;
            ++next_slack;
        }
        if (s.slack != 1) {
            t.at(i, next_art) = 1;
            phase1[next_art] = 1;
            is_art[next_art] = true;
            unit_col[i] = next_art;
            ++next_art;
        }
        t.basic(i) = unit_col[i];
    }

    t.price(phase1);
    std::vector<bool> allowed(ncols, true);
    t.run(allowed);
    out.pivots = t.pivots();
    if (t.value() > 0) {
        for (std::size_t i = 0; i < m; ++i) {
            if (srows[i].origin == none) continue;
            Rational pi = phase1[unit_col[i]] - t.cost(unit_col[i]);
            out.farkas[srows[i].origin] = srows[i].flip * pi;
        }
        out.status = LpStatus::Infeasible;
        return out;
    }

    // Drive zero-level artificials out of the basis where possible.
    for (std::size_t i = 0; i < m; ++i) {
        if (!is_art[t.basic(i)]) continue;
        for (std::size_t j = 0; j < ncols; ++j)
            if (!is_art[j] && t.at(i, j) != 0) {
                t.pivot(i, j);
                break;
            }
    }
    for (std::size_t j = 0; j < ncols; ++j) allowed[j] = !is_art[j];

    if (!lp.objective.empty()) {
        std::vector<Rational> c(ncols, 0);
        for (std::size_t k = 0; k < nstruct; ++k)
            c[k] = cols[k].sign > 0 ? lp.objective[cols[k].var] : Rational(-lp.objective[cols[k].var]);
        t.price(c);
        if (!t.run(allowed)) {
            out.status = LpStatus::Unbounded;
            out.pivots = t.pivots();
            return out;
        }
    }
    out.pivots = t.pivots();

    std::vector<Rational> xs(ncols, 0);
    for (std::size_t i = 0; i < m; ++i) xs[t.basic(i)] = t.rhs(i);
    out.x = shift;
    for (std::size_t k = 0; k < nstruct; ++k)
        if (xs[k] != 0) out.x[cols[k].var] += cols[k].sign > 0 ? xs[k] : Rational(-xs[k]);
    out.value = 0;
    if (!lp.objective.empty())
        for (std::size_t j = 0; j < nv; ++j) out.value += lp.objective[j] * out.x[j];
    out.status = LpStatus::Optimal;
    return out;
}

inline Rational violation(const LpRow &row, const std::vector<Rational> &x)
{
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
        if (row.coef[j] != 0) lhs += row.coef[j] * x[j];
    switch (row.sense) {
    case Sense::GE: return row.rhs - lhs;
    case Sense::LE: return lhs - row.rhs;
    case Sense::EQ: return abs(lhs - row.rhs);
    }
    return 0;
}

} // namespace detail

/// Exact LP with lazily activated rows. The active set persists across calls, so a
/// branch-and-bound search reuses the rows it has already needed.
class LpSession {
public:
    explicit LpSession(LinearProgram lp, std::size_t batch = 16)
        : lp_(std::move(lp)), active_(lp_.rows.size(), false), batch_(batch)
    {
        for (auto &r : lp_.rows)
            if (r.coef.size() != lp_.num_vars) throw Error(ErrorCode::DimensionMismatch, "row length differs from variable count");
        if (!lp_.objective.empty() && lp_.objective.size() != lp_.num_vars)
            throw Error(ErrorCode::DimensionMismatch, "objective length differs from variable count");
    }

    const LinearProgram &program() const { return lp_; }

    LpSolution solve() { return solve(lp_.lower, lp_.upper); }

    LpSolution solve(const std::vector<std::optional<Rational>> &lower, const std::vector<std::optional<Rational>> &upper)
    {
        for (;;) {
            LpSolution sol = detail::solve_subset(lp_, lower, upper, active_);
            total_pivots_ += sol.pivots;
            if (sol.status == LpStatus::Infeasible) return sol;
            if (sol.status == LpStatus::Unbounded) {
                if (std::all_of(active_.begin(), active_.end(), [](bool b) { return b; })) return sol;
                std::fill(active_.begin(), active_.end(), true);
                continue;
            }
            std::vector<std::pair<Rational, std::size_t>> violated;
            for (std::size_t r = 0; r < lp_.rows.size(); ++r) {
                if (active_[r]) continue;
                Rational v = detail::violation(lp_.rows[r], sol.x);
                if (v > 0) violated.emplace_back(v, r);
            }
            if (violated.empty()) return sol;
            std::stable_sort(violated.begin(), violated.end(),
                             [](const auto &a, const auto &b) { return a.first > b.first; });
            for (std::size_t k = 0; k < violated.size() && k < batch_; ++k) active_[violated[k].second] = true;
        }
    }

    std::size_t total_pivots() const { return total_pivots_; }

private:
    LinearProgram lp_;
    std::vector<bool> active_;
    std::size_t batch_;
    std::size_t total_pivots_ = 0;
};

inline LpSolution solve_lp(const LinearProgram &lp)
{
    LpSession s(lp);
    return s.solve();
}

struct IlpResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Integer> x;
    Rational value = 0;
    std::size_t nodes = 0;
};

/// Depth-first branch and bound; branches on the most fractional variable (ties by
/// tie_rank), lower branch first. Stops at the first integer point when the program has no objective.
inline IlpResult branch_and_bound(const LinearProgram &lp, std::vector<std::size_t> tie_rank = {})
{
    if (tie_rank.empty()) {
        tie_rank.resize(lp.num_vars);
        for (std::size_t j = 0; j < lp.num_vars; ++j) tie_rank[j] = j;
    }
    const bool optimize = !lp.objective.empty();
    bool integral_objective = optimize;
    for (auto &c : lp.objective)
        if (!is_integral(c)) integral_objective = false;

    LpSession session(lp);
    struct Node { std::vector<std::optional<Rational>> lower, upper; };
    std::vector<Node> stack{{lp.lower, lp.upper}};
    IlpResult best;
    bool have = false;
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        ++best.nodes;
        LpSolution sol = session.solve(node.lower, node.upper);
        if (sol.status == LpStatus::Infeasible) continue;
        if (sol.status == LpStatus::Unbounded) {
            if (best.nodes == 1) throw Error(ErrorCode::Unbounded, "integer program is unbounded below");
            continue;
        }
        if (optimize && have) {
            Rational bound = sol.value;
            if (integral_objective) {
                Integer c;
                mpz_cdiv_q(c.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
                bound = c;
            }
            if (bound >= best.value) continue;
        }
        std::size_t pick = lp.num_vars;
        Rational pick_score = -1;
        for (std::size_t j = 0; j < lp.num_vars; ++j) {
            if (is_integral(sol.x[j])) continue;
            Integer fl;
            mpz_fdiv_q(fl.get_mpz_t(), sol.x[j].get_num_mpz_t(), sol.x[j].get_den_mpz_t());
            Rational f = sol.x[j] - fl;
            Rational score = f < Rational(1) - f ? f : Rational(Rational(1) - f);
            if (score > pick_score || (score == pick_score && tie_rank[j] < tie_rank[pick])) {
                pick = j;
                pick_score = score;
            }
        }
        if (pick == lp.num_vars) {
            if (!optimize || !have || sol.value < best.value) {
                best.status = LpStatus::Optimal;
                best.value = sol.value;
                best.x.clear();
                for (auto &q : sol.x) best.x.push_back(q.get_num());
                have = true;
            }
            if (!optimize) break;
            continue;
        }
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), sol.x[pick].get_num_mpz_t(), sol.x[pick].get_den_mpz_t());
        Node up = node, down = std::move(node);
        up.lower[pick] = Rational(fl + 1);
        down.upper[pick] = Rational(fl);
        stack.push_back(std::move(up));
        stack.push_back(std::move(down));
    }
    return best;
}

/// Strict rows A w >= 1, equality rows B w = 0, optional box -k <= w <= k.
struct RationalMatrixSystem {
    std::size_t num_vars = 0;
    std::vector<std::vector<Rational>> strict_rows;
    std::vector<std::vector<Rational>> eq_rows;
    std::optional<Integer> box;
    std::vector<std::size_t> tie_rank; // branching tie order; empty means index order

    void check() const
    {
        for (auto &r : strict_rows)
            if (r.size() != num_vars) throw Error(ErrorCode::DimensionMismatch, "strict row length differs from variable count");
        for (auto &r : eq_rows)
            if (r.size() != num_vars) throw Error(ErrorCode::DimensionMismatch, "equality row length differs from variable count");
        if (!tie_rank.empty() && tie_rank.size() != num_vars)
            throw Error(ErrorCode::DimensionMismatch, "tie order length differs from variable count");
        if (box && *box < 0) throw Error(ErrorCode::InvalidArgument, "negative box bound");
    }

    LinearProgram program(bool with_box) const
    {
        LinearProgram lp(num_vars);
        for (auto &r : strict_rows) lp.rows.push_back({r, Sense::GE, Rational(1)});
        for (auto &r : eq_rows) lp.rows.push_back({r, Sense::EQ, Rational(0)});
        if (with_box && box)
            for (std::size_t j = 0; j < num_vars; ++j) {
                lp.lower[j] = Rational(-*box);
                lp.upper[j] = Rational(*box);
            }
        return lp;
    }
};

struct LpPoint {
    std::vector<Rational> w;
};

/// Farkas pair: y >= 0, sum(y) >= 1, y^T A + z^T B = 0, scaled to coprime integers.
struct LpInfeasible {
    std::vector<Integer> y, z;
};

using FeasibilityCertificate = std::variant<LpPoint, LpInfeasible>;

template <typename Num>
bool verify_point(const RationalMatrixSystem &sys, const std::vector<Num> &w, bool check_box = true)
{
    if (w.size() != sys.num_vars) return false;
    auto dot = [&](const std::vector<Rational> &row) {
        Rational s = 0;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) s += row[j] * w[j];
        return s;
    };
    for (auto &r : sys.strict_rows)
        if (dot(r) < 1) return false;
    for (auto &r : sys.eq_rows)
        if (dot(r) != 0) return false;
    if (check_box && sys.box)
        for (auto &x : w)
            if (abs(Rational(x)) > Rational(*sys.box)) return false;
    return true;
}

inline bool verify_farkas(const RationalMatrixSystem &sys, const std::vector<Integer> &y, const std::vector<Integer> &z)
{
    if (y.size() != sys.strict_rows.size() || z.size() != sys.eq_rows.size()) return false;
    Integer total = 0;
    for (auto &v : y) {
        if (v < 0) return false;
        total += v;
    }
    if (total < 1) return false;
    for (std::size_t j = 0; j < sys.num_vars; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < y.size(); ++i)
            if (y[i] != 0) s += y[i] * sys.strict_rows[i][j];
        for (std::size_t i = 0; i < z.size(); ++i)
            if (z[i] != 0) s += z[i] * sys.eq_rows[i][j];
        if (s != 0) return false;
    }
    return true;
}

/// Feasibility of A w >= 1, B w = 0 (and the box, if set), or a Farkas certificate of
/// emptiness of A w > 0, B w = 0. Throws BoxInfeasible when only the box is at fault.
inline FeasibilityCertificate lp_feasible(const RationalMatrixSystem &sys)
{
    sys.check();
    LpSolution cone = solve_lp(sys.program(false));
    if (cone.status == LpStatus::Infeasible) {
        const std::size_t na = sys.strict_rows.size();
        std::vector<Rational> all(cone.farkas.begin(), cone.farkas.end());
        Integer l = lcm_of_denominators(all);
        Integer g = 0;
        std::vector<Integer> ints;
        for (auto &q : all) {
            Rational s = q * l;
            ints.push_back(s.get_num());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
        }
        LpInfeasible cert;
        for (std::size_t i = 0; i < ints.size(); ++i) {
            Integer v = g > 0 ? Integer(ints[i] / g) : ints[i];
            (i < na ? cert.y : cert.z).push_back(v);
        }
        if (!verify_farkas(sys, cert.y, cert.z))
            throw std::logic_error("simplex produced an invalid Farkas certificate");
        return cert;
    }
    if (!sys.box) {
        if (!verify_point(sys, cone.x)) throw std::logic_error("simplex produced an infeasible point");
        return LpPoint{cone.x};
    }
    LpSolution boxed = solve_lp(sys.program(true));
    if (boxed.status != LpStatus::Optimal)
        throw Error(ErrorCode::BoxInfeasible, "system is feasible but not within the box");
    if (!verify_point(sys, boxed.x)) throw std::logic_error("simplex produced an infeasible point");
    return LpPoint{boxed.x};
}

/// Integer point of the boxed system, or nullopt.
inline std::optional<std::vector<Integer>> ilp_feasible(const RationalMatrixSystem &sys)
{
    sys.check();
    if (!sys.box) throw Error(ErrorCode::InvalidArgument, "integer feasibility needs a box bound");
    IlpResult r = branch_and_bound(sys.program(true), sys.tie_rank);
    if (r.status != LpStatus::Optimal) return std::nullopt;
    if (!verify_point(sys, r.x)) throw std::logic_error("branch and bound produced an infeasible point");
    return r.x;
}

struct IlpOptimum {
    Rational value;
    std::vector<Integer> x;
};

/// Integer minimum of objective over the system with extra per-variable lower bounds.
inline std::optional<IlpOptimum> ilp_minimize(const std::vector<Rational> &objective, const RationalMatrixSystem &sys,
                                              const std::map<std::size_t, Integer> &lower_bounds)
{
    sys.check();
    if (objective.size() != sys.num_vars) throw Error(ErrorCode::DimensionMismatch, "objective length differs from variable count");
    LinearProgram lp = sys.program(true);
    for (auto &[j, lb] : lower_bounds) {
        if (j >= sys.num_vars) throw Error(ErrorCode::DimensionMismatch, "lower bound on unknown variable");
        Rational q(lb);
        if (!lp.lower[j] || *lp.lower[j] < q) lp.lower[j] = q;
    }
    lp.objective = objective;
    IlpResult r = branch_and_bound(lp, sys.tie_rank);
    if (r.status != LpStatus::Optimal) return std::nullopt;
    if (!verify_point(sys, r.x)) throw std::logic_error("branch and bound produced an infeasible point");
    for (auto &[j, lb] : lower_bounds)
        if (r.x[j] < lb) throw std::logic_error("branch and bound violated a lower bound");
    return IlpOptimum{r.value, r.x};
}

} // namespace cyclepat
