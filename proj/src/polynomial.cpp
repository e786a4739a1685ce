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

#include "umbra/polynomial.hpp"

#include <algorithm>

namespace umbra {

Polynomial Polynomial::monomial(int n, const Rational& c) {
    if (n < 0)
        throw std::domain_error("Polynomial: negative monomial degree");
    if (c.is_zero())
        return {};
    std::vector<Rational> cs(static_cast<size_t>(n) + 1);
    cs.back() = c;
    return Polynomial(std::move(cs));
}

Rational Polynomial::operator()(const Rational& v) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * v + *it;
    return acc;
}

Polynomial Polynomial::compose_affine(const Rational& s, const Rational& u) const {
    // Horner in the polynomial ring with argument s*x + u.
    Polynomial arg(std::vector<Rational>{u, s});
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * arg + Polynomial(*it);
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_)
        a *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

std::string Polynomial::str() const {
    if (is_zero())
        return "0";
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero())
            continue;
        const bool neg = c < Rational(0);
        Rational mag = neg ? -c : c;
        if (out.empty()) {
            if (neg)
                out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const bool unit = (mag == Rational(1));
        if (i == 0) {
            out += mag.str();
        } else {
            if (!unit) {
                out += mag.str();
                out += "*";
            }
            out += "x";
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace umbra
