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

#include <ostream>
#include <string>
#include <vector>

#include "umbra/rational.hpp"

namespace umbra {

// Dense univariate polynomial in x over Rational. Trailing zero coefficients
// are trimmed; the zero polynomial has an empty coefficient list and
// degree() == -1 (standing in for degree -infinity).
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(const Rational& c) {
        if (!c.is_zero())
            coeffs_.push_back(c);
    }
    Polynomial(long c) : Polynomial(Rational(c)) {}
    Polynomial(int c) : Polynomial(Rational(c)) {}
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial x() { return monomial(1); }
    static Polynomial monomial(int n, const Rational& c = Rational(1));

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    // Coefficient of x^i; zero beyond the degree.
    const Rational& coeff(int i) const {
        static const Rational zero;
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<size_t>(i)]
                                                                : zero;
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const {
        if (is_zero())
            throw std::domain_error("Polynomial: zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    // Exact evaluation at a rational point (Horner).
    Rational operator()(const Rational& v) const;

    // p(s*x + u), expanded in the monomial basis.
    Polynomial compose_affine(const Rational& s, const Rational& u) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    // Human-readable form with ascending powers, e.g. "-1/6 + x^2".
    std::string str() const;

  private:
    std::vector<Rational> coeffs_;
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

} // namespace umbra
