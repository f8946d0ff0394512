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

#include <set>

namespace cyclepat {

/// Homogeneous integer linear form over the edge weights.
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(std::size_t m) : coef_(m, 0) {}

    static LinearForm unit(std::size_t m, EdgeIndex e)
    {
        LinearForm f(m);
        f.coef_.at(e) = 1;
        return f;
    }

    const std::vector<Integer> &coefficients() const noexcept { return coef_; }
    std::size_t size() const noexcept { return coef_.size(); }

    bool is_zero() const
    {
        for (auto &c : coef_)
            if (c != 0) return false;
        return true;
    }

    Rational evaluate(const WeightFn &w) const
    {
        Rational s = 0;
        for (std::size_t e = 0; e < coef_.size(); ++e)
            if (coef_[e] != 0) s += Rational(coef_[e]) * w[e];
        return s;
    }

    LinearForm &operator+=(const LinearForm &o)
    {
        resize_like(o);
        for (std::size_t e = 0; e < o.coef_.size(); ++e) coef_[e] += o.coef_[e];
        return *this;
    }
    LinearForm &operator-=(const LinearForm &o)
    {
        resize_like(o);
        for (std::size_t e = 0; e < o.coef_.size(); ++e) coef_[e] -= o.coef_[e];
        return *this;
    }
    LinearForm &operator*=(const Integer &k)
    {
        for (auto &c : coef_) c *= k;
        return *this;
    }

    friend LinearForm operator+(LinearForm a, const LinearForm &b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm &b) { return a -= b; }
    friend LinearForm operator-(LinearForm a) { return a *= Integer(-1); }
    bool operator==(const LinearForm &o) const { return coef_ == o.coef_; }

private:
    void resize_like(const LinearForm &o)
    {
        if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), 0);
    }

    std::vector<Integer> coef_;
};

/// Primitive integer direction with first nonzero entry positive.
inline std::vector<Integer> normalize_hyperplane(std::vector<Integer> a)
{
    Integer g = 0;
    for (auto &x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) throw Error(ErrorCode::InvalidArgument, "zero query vector");
    bool flip = false;
    for (auto &x : a)
        if (x != 0) {
            flip = x < 0;
            break;
        }
    for (auto &x : a) {
        x /= g;
        if (flip) x = -x;
    }
    return a;
}

struct QueryTrace {
    std::vector<std::vector<Integer>> queries; // each query is sign(a . w)
    std::vector<Sign> outcomes;

    std::set<std::vector<Integer>> hyperplanes() const
    {
        std::set<std::vector<Integer>> h;
        for (auto &q : queries) h.insert(normalize_hyperplane(q));
        return h;
    }
};

/// A linear form together with its value at the concrete weights.
struct TracedNum {
    LinearForm form;
    Rational value;

    friend TracedNum operator+(const TracedNum &a, const TracedNum &b) { return {a.form + b.form, a.value + b.value}; }
    friend TracedNum operator-(const TracedNum &a, const TracedNum &b) { return {a.form - b.form, a.value - b.value}; }
};

/// Evaluates at the concrete weights and records every nonzero sign query.
class RecordingContext {
public:
    using Num = TracedNum;
    explicit RecordingContext(const WeightFn &w) : w_(w) {}
    Num weight(EdgeIndex e) const { return {LinearForm::unit(w_.size(), e), w_[e]}; }
    Num zero() const { return {LinearForm(w_.size()), 0}; }
    int sign(const Num &x)
    {
        int s = sgn(x.value);
        if (x.form.is_zero()) {
            if (s != 0) throw std::logic_error("zero form with nonzero value");
            return 0;
        }
        trace.queries.push_back(x.form.coefficients());
        trace.outcomes.push_back(static_cast<Sign>(s));
        return s;
    }

    QueryTrace trace;

private:
    const WeightFn &w_;
};

/// Answers sign queries from a recorded trace, with no access to weights.
class ReplayContext {
public:
    using Num = LinearForm;
    ReplayContext(const QueryTrace &trace, std::size_t m) : trace_(trace), m_(m) {}
    Num weight(EdgeIndex e) const { return LinearForm::unit(m_, e); }
    Num zero() const { return LinearForm(m_); }
    int sign(const Num &x)
    {
        if (x.is_zero()) return 0;
        if (pos_ >= trace_.queries.size() || trace_.queries[pos_] != x.coefficients())
            throw Error(ErrorCode::OracleInconsistent, "replay diverged from the recorded trace at query " + std::to_string(pos_));
        return static_cast<int>(trace_.outcomes[pos_++]);
    }
    std::size_t consumed() const noexcept { return pos_; }

private:
    const QueryTrace &trace_;
    std::size_t m_;
    std::size_t pos_ = 0;
};

} // namespace cyclepat
