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

#include "umbra/central.hpp"

#include <stdexcept>

#include "umbra/series.hpp"

namespace umbra {

Polynomial CentralExpansion::reconstruct() const {
    Polynomial p;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero())
            continue;
        // (x - base)^[k]
        Polynomial basis = central_factorial(static_cast<int>(k)).compose_affine(Rational(1), -base);
        p += basis * coeffs[k];
    }
    return p;
}

Polynomial central_factorial(int n) {
    if (n < 0)
        throw std::domain_error("central_factorial: negative index");
    if (n == 0)
        return Polynomial(1);
    Polynomial p = Polynomial::x();
    const Rational half_n(n, 2);
    for (int j = 1; j < n; ++j)
        p *= Polynomial(std::vector<Rational>{half_n - Rational(j), Rational(1)});
    return p;
}

Polynomial delta(const Polynomial& p) {
    return p.compose_affine(Rational(1), Rational(1, 2)) -
           p.compose_affine(Rational(1), Rational(-1, 2));
}

Polynomial delta_iter(const Polynomial& p, int k) {
    if (k < 0)
        throw std::domain_error("delta_iter: negative iteration count");
    Polynomial q = p;
    for (int i = 0; i < k; ++i)
        q = delta(q);
    return q;
}

Polynomial delta_iter_sum(const Polynomial& p, int k) {
    if (k < 0)
        throw std::domain_error("delta_iter_sum: negative iteration count");
    Polynomial acc;
    for (int l = 0; l <= k; ++l) {
        Rational w = Rational::binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(l));
        if ((k - l) % 2 == 1)
            w = -w;
        acc += p.compose_affine(Rational(1), Rational(2 * l - k, 2)) * w;
    }
    return acc;
}

CentralExpansion to_central_basis(const Polynomial& p, const Rational& b) {
    CentralExpansion e;
    e.base = b;
    const int deg = p.degree() < 0 ? 0 : p.degree();
    e.coeffs.reserve(static_cast<size_t>(deg) + 1);
    Polynomial q = p;
    Rational inv_fact(1);
    for (int k = 0; k <= deg; ++k) {
        if (k > 0) {
            q = delta(q);
            inv_fact /= Rational(k);
        }
        e.coeffs.push_back(q(b) * inv_fact);
    }
    return e;
}

CentralFactorialTable central_T(int max_n) {
    if (max_n < 0)
        throw std::domain_error("central_T: negative order");
    CentralFactorialTable table;
    table.max_n = max_n;
    table.entries.resize(static_cast<size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n)
        table.entries[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);

    const Series<Rational> em1 = exp_of(Series<Rational>::t(max_n)) - Series<Rational>::one(max_n);
    const Series<Rational> sym = scale_arg(em1, Rational(1, 2)) - scale_arg(em1, Rational(-1, 2));

    Series<Rational> pw = Series<Rational>::one(max_n);
    Rational inv_fact(1);
    for (int k = 0; k <= max_n; ++k) {
        if (k > 0) {
            pw = pw * sym;
            inv_fact /= Rational(k);
        }
        for (int n = k; n <= max_n; ++n)
            table.entries[static_cast<size_t>(n)][static_cast<size_t>(k)] = pw.egf_coeff(n) * inv_fact;
    }
    return table;
}

} // namespace umbra
