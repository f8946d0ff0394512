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

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cyclepat {

using Rational = mpq_class;
using Integer = mpz_class;

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

inline constexpr std::size_t kDefaultCycleBudget = 1'000'000;
inline constexpr std::size_t kDefaultStrategyBudget = 1'000'000;

enum class ErrorCode {
    DanglingEndpoint,
    DuplicateId,
    NotStronglyConnected,
    NotAnArena,
    CycleBudgetExceeded,
    UnknownCycle,
    PatternNotTotal,
    BoxInfeasible,
    DimensionMismatch,
    Unbounded,
    IsRealizable,
    NotRealizablePattern,
    NotParityRealizable,
    NotIntegral,
    StrategyBudgetExceeded,
    IterationBudgetExceeded,
    MissingCertificate,
    OracleInconsistent,
    NegativeCycleReachable,
    InvalidArgument,
    ParseError,
};

inline std::string_view error_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::NotAnArena: return "NotAnArena";
    case ErrorCode::CycleBudgetExceeded: return "CycleBudgetExceeded";
    case ErrorCode::UnknownCycle: return "UnknownCycle";
    case ErrorCode::PatternNotTotal: return "PatternNotTotal";
    case ErrorCode::BoxInfeasible: return "BoxInfeasible";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::IsRealizable: return "IsRealizable";
    case ErrorCode::NotRealizablePattern: return "NotRealizablePattern";
    case ErrorCode::NotParityRealizable: return "NotParityRealizable";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::StrategyBudgetExceeded: return "StrategyBudgetExceeded";
    case ErrorCode::IterationBudgetExceeded: return "IterationBudgetExceeded";
    case ErrorCode::MissingCertificate: return "MissingCertificate";
    case ErrorCode::OracleInconsistent: return "OracleInconsistent";
    case ErrorCode::NegativeCycleReachable: return "NegativeCycleReachable";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Domain error carrying a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

inline Sign sign_of_int(int s) noexcept
{
    return s < 0 ? Sign::Minus : (s > 0 ? Sign::Plus : Sign::Zero);
}

inline Sign sign_of(const Rational &q) noexcept { return sign_of_int(sgn(q)); }
inline Sign sign_of(const Integer &z) noexcept { return sign_of_int(sgn(z)); }

inline Sign negate(Sign s) noexcept { return static_cast<Sign>(-static_cast<int>(s)); }

inline char sign_char(Sign s) noexcept
{
    return s == Sign::Plus ? '+' : (s == Sign::Minus ? '-' : '0');
}

inline std::string to_string(const Rational &q) { return q.get_str(); }
inline std::string to_string(const Integer &z) { return z.get_str(); }

/// Parses "-3", "7/2" or a decimal fraction like "0.25" into an exact rational.
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty number");
    auto bad = [&] { return Error(ErrorCode::ParseError, "not an exact number: '" + s + "'"); };
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos) throw bad();
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (negative || (!whole.empty() && whole[0] == '+')) whole = whole.substr(1);
        if (whole.empty()) whole = "0";
        if (frac.empty()) throw bad();
        for (char c : whole + frac)
            if (c < '0' || c > '9') throw bad();
        Integer num(whole + frac, 10);
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        Rational q(num, den);
        q.canonicalize();
        return negative ? Rational(-q) : q;
    }
    auto check_int = [&](const std::string &part) {
        std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i == part.size()) throw bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw bad();
    };
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    check_int(num);
    if (!num.empty() && num[0] == '+') num = num.substr(1);
    Rational q;
    if (slash == std::string::npos) {
        q = Rational(Integer(num, 10));
    } else {
        std::string den = s.substr(slash + 1);
        check_int(den);
        if (den[0] == '+' || den[0] == '-') throw bad();
        Integer d(den, 10);
        if (d == 0) throw bad();
        q = Rational(Integer(num, 10), d);
        q.canonicalize();
    }
    return q;
}

inline bool is_integral(const Rational &q) { return q.get_den() == 1; }

inline Integer lcm_of_denominators(const std::vector<Rational> &values)
{
    Integer l = 1;
    for (const auto &q : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

} // namespace cyclepat
