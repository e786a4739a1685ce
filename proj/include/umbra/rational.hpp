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

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace umbra {

// Arbitrary-precision rational in lowest terms with positive denominator.
// Zero is 0/1. All arithmetic is exact.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(int n) : q_(static_cast<signed long>(n)) {}
    Rational(long num, long den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(num, 1);
        q_ /= mpq_class(den, 1);
    }
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(num) / mpq_class(den);
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Accepts "p", "p/q", optionally signed. Throws std::invalid_argument on
    // malformed input and std::domain_error on a zero denominator.
    static Rational from_string(std::string_view s);

    static Rational factorial(unsigned long n) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), n);
        return Rational(f, mpz_class(1));
    }
    static Rational binomial(unsigned long n, unsigned long k) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), n, k);
        return Rational(b, mpz_class(1));
    }
    // 2^e for any integer e.
    static Rational pow2(long e) { return Rational(2).pow(e); }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_canonical() const {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
        return q_.get_den() > 0 && g == 1;
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const {
        Rational r;
        r.q_ = -q_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational inverse() const {
        if (is_zero())
            throw std::domain_error("Rational: inverse of zero");
        Rational r;
        r.q_ = 1 / q_;
        return r;
    }

    // Integer power; e < 0 inverts first (throws on zero base).
    Rational pow(long e) const {
        if (e < 0)
            return inverse().pow(-e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        return Rational(n, d);
    }

    // Canonical text form: "p/q", or "p" when the denominator is 1.
    std::string str() const { return q_.get_str(); }

    std::size_t num_bits() const { return mpz_sizeinbase(q_.get_num().get_mpz_t(), 2); }
    std::size_t den_bits() const { return mpz_sizeinbase(q_.get_den().get_mpz_t(), 2); }

  private:
    mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline Rational Rational::from_string(std::string_view s) {
    if (s.empty())
        throw std::invalid_argument("Rational: empty string");
    mpq_class q;
    try {
        q = mpq_class(std::string(s), 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    }
    if (q.get_den() == 0)
        throw std::domain_error("Rational: zero denominator in '" + std::string(s) + "'");
    q.canonicalize();
    Rational r;
    r.q_ = std::move(q);
    return r;
}

} // namespace umbra
