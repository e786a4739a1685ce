/*
   Copyright 2026 the umbra authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "umbra/families.hpp"

#include <stdexcept>

#include "umbra/series.hpp"

namespace umbra {

namespace {

using SR = Series<Rational>;
using SP = Series<Polynomial>;

SR exp_t(int n) { return exp_of(SR::t(n)); }
SR expm1_t(int n) { return exp_t(n) - SR::one(n); }
SR log1p_t(int n) { return log1p_of(SR::t(n)); }
SR one_plus_t(int n) { return SR::one(n) + SR::t(n); }

// log(1+t)/t, already divided through by t: coefficient of t^n is
// (-1)^n / (n+1).
SR log1p_over_t(int n) {
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        c[static_cast<size_t>(i)] = Rational(i % 2 == 0 ? 1 : -1, i + 1);
    return SR(n, std::move(c));
}

// (e^t - 1)/t: coefficient of t^n is 1/(n+1)!.
SR expm1_over_t(int n) {
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    Rational f(1);
    for (int i = 0; i <= n; ++i) {
        f /= Rational(i + 1);
        c[static_cast<size_t>(i)] = f;
    }
    return SR(n, std::move(c));
}

// (e^t - e^{-t})/t: coefficient of t^n is 2/(n+1)! for even n, else 0.
SR exp_diff_over_t(int n) {
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    Rational f(1);
    for (int i = 0; i <= n; ++i) {
        f /= Rational(i + 1);
        if (i % 2 == 0)
            c[static_cast<size_t>(i)] = Rational(2) * f;
    }
    return SR(n, std::move(c));
}

// (1+t)^x = exp(x log(1+t)) in the polynomial coefficient ring.
SP one_plus_t_pow_x(int n) { return exp_of(lift(log1p_t(n)) * Polynomial::x()); }

// e^{xt} = exp(x t) in the polynomial coefficient ring.
SP exp_xt(int n) { return exp_of(lift(SR::t(n)) * Polynomial::x()); }

std::vector<Polynomial> extract_polys(const SP& s, int max_n) {
    std::vector<Polynomial> out;
    out.reserve(static_cast<size_t>(max_n) + 1);
    for (int i = 0; i <= max_n; ++i)
        out.push_back(s.egf_coeff(i));
    return out;
}

std::vector<Rational> extract_numbers(const SR& s, int max_n) {
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(max_n) + 1);
    for (int i = 0; i <= max_n; ++i)
        out.push_back(s.egf_coeff(i));
    return out;
}

void check_max_n(int max_n) {
    if (max_n < 0)
        throw std::invalid_argument("family: max_n must be non-negative");
}

Triangle triangle_from_powers(int max_n, const SR& base) {
    Triangle tri(static_cast<size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n)
        tri[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
    SR pw = SR::one(max_n);
    Rational inv_fact(1);
    for (int k = 0; k <= max_n; ++k) {
        if (k > 0) {
            pw = pw * base;
            inv_fact /= Rational(k);
        }
        for (int n = k; n <= max_n; ++n)
            tri[static_cast<size_t>(n)][static_cast<size_t>(k)] = pw.egf_coeff(n) * inv_fact;
    }
    return tri;
}

// Scalar generating-function bases; the polynomial family is base * e^{xt}
// or base * (1+t)^x, and the number sequence is the base alone.
SR euler_base(int n) { return div(SR::constant(Rational(2), n), exp_t(n) + SR::one(n)); }
SR bernoulli_base(int n) { return div(SR::one(n), expm1_over_t(n)); }
SR type2_euler_base(int n) {
    return div(SR::constant(Rational(2), n), exp_t(n) + scale_arg(exp_t(n), Rational(-1)));
}
SR changhee_base(int n) {
    return div(SR::constant(Rational(2), n), SR::constant(Rational(2), n) + SR::t(n));
}
SR daehee_base(int n) { return log1p_over_t(n); }
SR type2_changhee_base(int n, int order) {
    const SR u = one_plus_t(n);
    const SR base = div(SR::constant(Rational(2), n), u + div(SR::one(n), u));
    return pow_int(base, order);
}
SR type2_bernoulli_base(int n, int order) { return pow_int(exp_diff_over_t(n), -order); }
SR type2_daehee_base(int n, int order) {
    // ((1+t) - (1+t)^{-1})/t = (2+t)/(1+t), so the base of the family is
    // (log(1+t)/t) / ((2+t)/(1+t)).
    const SR denom = div(SR::constant(Rational(2), n) + SR::t(n), one_plus_t(n));
    return pow_int(div(log1p_over_t(n), denom), order);
}

std::vector<Polynomial> polys_from_base(const SR& base, const SP& xfactor, int max_n) {
    return extract_polys(lift(base) * xfactor, max_n);
}

} // namespace

void FamilyId::validate() const {
    if (!has_order_variants() && order != 1)
        throw std::invalid_argument("family '" + name() + "' has no order variants");
}

std::string FamilyId::name() const {
    switch (family) {
    case Family::stirling1: return "stirling1";
    case Family::stirling2: return "stirling2";
    case Family::euler: return "euler";
    case Family::type2_euler: return "type2-euler";
    case Family::bernoulli: return "bernoulli";
    case Family::type2_bernoulli: return "type2-bernoulli";
    case Family::changhee: return "changhee";
    case Family::type2_changhee: return "type2-changhee";
    case Family::daehee: return "daehee";
    case Family::type2_daehee: return "type2-daehee";
    }
    return "?";
}

std::optional<Family> FamilyId::parse_family(std::string_view name) {
    if (name == "stirling1") return Family::stirling1;
    if (name == "stirling2") return Family::stirling2;
    if (name == "euler") return Family::euler;
    if (name == "type2-euler") return Family::type2_euler;
    if (name == "bernoulli") return Family::bernoulli;
    if (name == "type2-bernoulli") return Family::type2_bernoulli;
    if (name == "changhee") return Family::changhee;
    if (name == "type2-changhee") return Family::type2_changhee;
    if (name == "daehee") return Family::daehee;
    if (name == "type2-daehee") return Family::type2_daehee;
    return std::nullopt;
}

Triangle stirling2(int max_n) {
    check_max_n(max_n);
    return triangle_from_powers(max_n, expm1_t(max_n));
}

Triangle stirling1(int max_n) {
    check_max_n(max_n);
    return triangle_from_powers(max_n, log1p_t(max_n));
}

std::vector<Polynomial> euler_polys(int max_n) {
    check_max_n(max_n);
    return polys_from_base(euler_base(max_n), exp_xt(max_n), max_n);
}

std::vector<Polynomial> bernoulli_polys(int max_n) {
    check_max_n(max_n);
    return polys_from_base(bernoulli_base(max_n), exp_xt(max_n), max_n);
}

std::vector<Polynomial> type2_euler_polys(int max_n) {
    check_max_n(max_n);
    return polys_from_base(type2_euler_base(max_n), exp_xt(max_n), max_n);
}

std::vector<Polynomial> changhee_polys(int max_n) {
    check_max_n(max_n);
    return polys_from_base(changhee_base(max_n), one_plus_t_pow_x(max_n), max_n);
}

std::vector<Polynomial> daehee_polys(int max_n) {
    check_max_n(max_n);
    return polys_from_base(daehee_base(max_n), one_plus_t_pow_x(max_n), max_n);
}

std::vector<Polynomial> type2_changhee_polys(int max_n, int order) {
    check_max_n(max_n);
    return polys_from_base(type2_changhee_base(max_n, order), one_plus_t_pow_x(max_n), max_n);
}

std::vector<Polynomial> type2_bernoulli_polys(int max_n, int order) {
    check_max_n(max_n);
    return polys_from_base(type2_bernoulli_base(max_n, order), exp_xt(max_n), max_n);
}

std::vector<Polynomial> type2_daehee_polys(int max_n, int order) {
    check_max_n(max_n);
    return polys_from_base(type2_daehee_base(max_n, order), one_plus_t_pow_x(max_n), max_n);
}

std::vector<Rational> euler_numbers(int max_n) {
    check_max_n(max_n);
    return extract_numbers(euler_base(max_n), max_n);
}

std::vector<Rational> bernoulli_numbers(int max_n) {
    check_max_n(max_n);
    return extract_numbers(bernoulli_base(max_n), max_n);
}

std::vector<Rational> type2_euler_numbers(int max_n) {
    check_max_n(max_n);
    return extract_numbers(type2_euler_base(max_n), max_n);
}

std::vector<Rational> changhee_numbers(int max_n) {
    check_max_n(max_n);
    return extract_numbers(changhee_base(max_n), max_n);
}

std::vector<Rational> daehee_numbers(int max_n) {
    check_max_n(max_n);
    return extract_numbers(daehee_base(max_n), max_n);
}

std::vector<Rational> type2_changhee_numbers(int max_n, int order) {
    check_max_n(max_n);
    return extract_numbers(type2_changhee_base(max_n, order), max_n);
}

std::vector<Rational> type2_bernoulli_numbers(int max_n, int order) {
    check_max_n(max_n);
    return extract_numbers(type2_bernoulli_base(max_n, order), max_n);
}

std::vector<Rational> type2_daehee_numbers(int max_n, int order) {
    check_max_n(max_n);
    return extract_numbers(type2_daehee_base(max_n, order), max_n);
}

FamilyTable family_table(const FamilyId& id, int max_n) {
    id.validate();
    check_max_n(max_n);
    FamilyTable table;
    table.id = id;
    table.max_n = max_n;
    switch (id.family) {
    case Family::stirling1: table.triangle = stirling1(max_n); break;
    case Family::stirling2: table.triangle = stirling2(max_n); break;
    case Family::euler: table.polys = euler_polys(max_n); break;
    case Family::type2_euler: table.polys = type2_euler_polys(max_n); break;
    case Family::bernoulli: table.polys = bernoulli_polys(max_n); break;
    case Family::type2_bernoulli: table.polys = type2_bernoulli_polys(max_n, id.order); break;
    case Family::changhee: table.polys = changhee_polys(max_n); break;
    case Family::type2_changhee: table.polys = type2_changhee_polys(max_n, id.order); break;
    case Family::daehee: table.polys = daehee_polys(max_n); break;
    case Family::type2_daehee: table.polys = type2_daehee_polys(max_n, id.order); break;
    }
    return table;
}

std::vector<Rational> family_numbers(const FamilyId& id, int max_n) {
    id.validate();
    check_max_n(max_n);
    switch (id.family) {
    case Family::euler: return euler_numbers(max_n);
    case Family::type2_euler: return type2_euler_numbers(max_n);
    case Family::bernoulli: return bernoulli_numbers(max_n);
    case Family::type2_bernoulli: return type2_bernoulli_numbers(max_n, id.order);
    case Family::changhee: return changhee_numbers(max_n);
    case Family::type2_changhee: return type2_changhee_numbers(max_n, id.order);
    case Family::daehee: return daehee_numbers(max_n);
    case Family::type2_daehee: return type2_daehee_numbers(max_n, id.order);
    case Family::stirling1:
    case Family::stirling2:
        throw std::invalid_argument("family '" + id.name() + "' is triangular, not a sequence");
    }
    throw std::invalid_argument("unknown family");
}

} // namespace umbra
