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

#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "umbra/kernels.hpp"
#include "umbra/polynomial.hpp"
#include "umbra/rational.hpp"

namespace umbra {

// Minimal ring interface the series engine needs from its coefficient type.
// The two instantiations used here are the rational scalars and polynomials
// in x; mixing rings in one operation is rejected at compile time.
template <typename R>
struct ring_ops;

template <>
struct ring_ops<Rational> {
    static Rational zero() { return {}; }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& a) { return a.is_zero(); }
    static Rational inverse(const Rational& a) {
        if (a.is_zero())
            throw std::domain_error("series: constant term not invertible");
        return a.inverse();
    }
    static Rational scale(const Rational& a, const Rational& c) { return a * c; }
};

template <>
struct ring_ops<Polynomial> {
    static Polynomial zero() { return {}; }
    static Polynomial one() { return Polynomial(1); }
    static bool is_zero(const Polynomial& a) { return a.is_zero(); }
    // Invertible elements are the nonzero constants.
    static Polynomial inverse(const Polynomial& a) {
        if (a.is_zero() || a.degree() > 0)
            throw std::domain_error("series: constant term not invertible");
        return Polynomial(a.coeff(0).inverse());
    }
    static Polynomial scale(const Polynomial& a, const Rational& c) { return a * c; }
};

// Truncated power series in t: coeffs()[n] is the plain Taylor coefficient of
// t^n, valid for 0 <= n <= order(). Every binary operation truncates its
// result to the smaller operand order. Values are immutable once built.
template <typename R>
class Series {
  public:
    explicit Series(int order) : order_(check_order(order)), coeffs_(static_cast<size_t>(order) + 1) {}
    Series(int order, std::vector<R> coeffs) : order_(check_order(order)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != static_cast<size_t>(order_) + 1)
            throw std::invalid_argument("Series: coefficient count must be order + 1");
    }

    static Series zero(int order) { return Series(order); }
    static Series one(int order) { return constant(ring_ops<R>::one(), order); }
    static Series constant(const R& c, int order) {
        Series s(order);
        s.coeffs_[0] = c;
        return s;
    }
    static Series t(int order) {
        Series s(order);
        if (order >= 1)
            s.coeffs_[1] = ring_ops<R>::one();
        return s;
    }

    int order() const { return order_; }
    const R& coeff(int n) const { return coeffs_.at(static_cast<size_t>(n)); }
    const std::vector<R>& coeffs() const { return coeffs_; }

    // n! * coeff(n): the exponential-generating-function coefficient.
    R egf_coeff(int n) const {
        return ring_ops<R>::scale(coeff(n), Rational::factorial(static_cast<unsigned long>(n)));
    }

    Series truncated(int order) const {
        if (order >= order_)
            return *this;
        std::vector<R> c(coeffs_.begin(), coeffs_.begin() + order + 1);
        return Series(order, std::move(c));
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

  private:
    static int check_order(int order) {
        if (order < 0)
            throw std::invalid_argument("Series: negative order");
        return order;
    }

    int order_;
    std::vector<R> coeffs_;
};

template <typename R>
Series<R> operator+(const Series<R>& a, const Series<R>& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<R> out(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        out[static_cast<size_t>(i)] = a.coeff(i) + b.coeff(i);
    return Series<R>(n, std::move(out));
}

template <typename R>
Series<R> operator-(const Series<R>& a, const Series<R>& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<R> out(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        out[static_cast<size_t>(i)] = a.coeff(i) - b.coeff(i);
    return Series<R>(n, std::move(out));
}

template <typename R>
Series<R> operator-(const Series<R>& a) {
    return Series<R>::zero(a.order()) - a;
}

namespace detail {

template <typename R>
Series<R> mul_with(const Series<R>& a, const Series<R>& b,
                   void (*kernel)(const std::vector<R>&, const std::vector<R>&, std::vector<R>&)) {
    const int n = std::min(a.order(), b.order());
    std::vector<R> out(static_cast<size_t>(n) + 1);
    kernel(a.coeffs(), b.coeffs(), out);
    return Series<R>(n, std::move(out));
}

} // namespace detail

template <typename R>
Series<R> operator*(const Series<R>& a, const Series<R>& b) {
    return detail::mul_with(a, b, kernels::cauchy<R>);
}

template <typename R>
Series<R> mul_serial(const Series<R>& a, const Series<R>& b) {
    return detail::mul_with(a, b, kernels::cauchy_serial<R>);
}

template <typename R>
Series<R> mul_parallel(const Series<R>& a, const Series<R>& b) {
    return detail::mul_with(a, b, kernels::cauchy_parallel<R>);
}

// Multiply every coefficient by a ring element.
template <typename R>
Series<R> operator*(const Series<R>& a, const R& c) {
    std::vector<R> out(a.coeffs());
    for (auto& v : out)
        v = v * c;
    return Series<R>(a.order(), std::move(out));
}

// Multiply every coefficient by a rational scalar.
template <typename R>
Series<R> scale(const Series<R>& a, const Rational& c) {
    std::vector<R> out(a.coeffs());
    for (auto& v : out)
        v = ring_ops<R>::scale(v, c);
    return Series<R>(a.order(), std::move(out));
}

// Quotient q with q*b == a through the truncation order. Requires the
// constant term of b to be invertible in the coefficient ring.
template <typename R>
Series<R> div(const Series<R>& a, const Series<R>& b) {
    const int n = std::min(a.order(), b.order());
    const R inv_b0 = ring_ops<R>::inverse(b.coeff(0));
    std::vector<R> q(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        R acc = a.coeff(i);
        for (int j = 0; j < i; ++j)
            acc = acc - q[static_cast<size_t>(j)] * b.coeff(i - j);
        q[static_cast<size_t>(i)] = acc * inv_b0;
    }
    return Series<R>(n, std::move(q));
}

// a^k by repeated product; a^0 = 1, and k < 0 goes through div(1, a) first.
template <typename R>
Series<R> pow_int(const Series<R>& a, long k) {
    if (k == 0)
        return Series<R>::one(a.order());
    const Series<R> base = k > 0 ? a : div(Series<R>::one(a.order()), a);
    const long reps = k > 0 ? k : -k;
    Series<R> r = base;
    for (long i = 1; i < reps; ++i)
        r = r * base;
    return r;
}

// f(g(t)) by Horner accumulation over powers of g; g must have zero constant
// term. One series product per coefficient of f.
template <typename R>
Series<R> compose(const Series<R>& f, const Series<R>& g) {
    if (!ring_ops<R>::is_zero(g.coeff(0)))
        throw std::domain_error("compose: inner series must have zero constant term");
    const int n = std::min(f.order(), g.order());
    const Series<R> gt = g.truncated(n);
    Series<R> acc = Series<R>::constant(f.coeff(n), n);
    for (int k = n - 1; k >= 0; --k)
        acc = acc * gt + Series<R>::constant(f.coeff(k), n);
    return acc;
}

// log(1 + g) = sum_{k>=1} (-1)^{k+1} g^k / k; g must have zero constant term.
template <typename R>
Series<R> log1p_of(const Series<R>& g) {
    if (!ring_ops<R>::is_zero(g.coeff(0)))
        throw std::domain_error("log1p_of: series must have zero constant term");
    const int n = g.order();
    Series<R> acc = Series<R>::zero(n);
    Series<R> pw = Series<R>::one(n);
    for (int k = 1; k <= n; ++k) {
        pw = pw * g;
        acc = acc + scale(pw, Rational(k % 2 == 1 ? 1 : -1, k));
    }
    return acc;
}

// exp(g) = sum_{k>=0} g^k / k!; g must have zero constant term.
template <typename R>
Series<R> exp_of(const Series<R>& g) {
    if (!ring_ops<R>::is_zero(g.coeff(0)))
        throw std::domain_error("exp_of: series must have zero constant term");
    const int n = g.order();
    Series<R> acc = Series<R>::one(n);
    Series<R> pw = Series<R>::one(n);
    Rational inv_fact(1);
    for (int k = 1; k <= n; ++k) {
        pw = pw * g;
        inv_fact /= Rational(k);
        acc = acc + scale(pw, inv_fact);
    }
    return acc;
}

// a(c*t): coefficient n picks up a factor c^n.
template <typename R>
Series<R> scale_arg(const Series<R>& a, const Rational& c) {
    std::vector<R> out(a.coeffs());
    Rational cn(1);
    for (int i = 1; i <= a.order(); ++i) {
        cn *= c;
        out[static_cast<size_t>(i)] = ring_ops<R>::scale(out[static_cast<size_t>(i)], cn);
    }
    return Series<R>(a.order(), std::move(out));
}

// Promote a scalar series to the polynomial coefficient ring.
inline Series<Polynomial> lift(const Series<Rational>& s) {
    std::vector<Polynomial> out;
    out.reserve(static_cast<size_t>(s.order()) + 1);
    for (const auto& c : s.coeffs())
        out.emplace_back(c);
    return Series<Polynomial>(s.order(), std::move(out));
}

} // namespace umbra
