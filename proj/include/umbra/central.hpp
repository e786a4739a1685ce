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

#include <vector>

#include "umbra/polynomial.hpp"
#include "umbra/rational.hpp"

namespace umbra {

// Expansion of a polynomial in the central-factorial basis around a base
// point b: p(x) = sum_k coeffs[k] * (x - b)^[k].
struct CentralExpansion {
    Rational base;
    std::vector<Rational> coeffs;

    Polynomial reconstruct() const;
};

// Triangular table of central factorial numbers of the second kind:
// entries[n][k] for 0 <= k <= n <= max_n.
struct CentralFactorialTable {
    int max_n = 0;
    std::vector<std::vector<Rational>> entries;

    const Rational& at(int n, int k) const { return entries.at(static_cast<size_t>(n)).at(static_cast<size_t>(k)); }
};

// The central factorial x^[n]: 1 for n = 0, otherwise the monic product
// x * (x + n/2 - 1) * (x + n/2 - 2) * ... * (x - n/2 + 1) with unit steps.
Polynomial central_factorial(int n);

// Central difference: p(x + 1/2) - p(x - 1/2).
Polynomial delta(const Polynomial& p);

// k-fold central difference by repeated application of delta.
Polynomial delta_iter(const Polynomial& p, int k);

// k-fold central difference in closed form:
// sum_l binom(k,l) (-1)^{k-l} p(x + l - k/2).
Polynomial delta_iter_sum(const Polynomial& p, int k);

// Expansion coefficients A_k = (delta^k p)(b) / k!, which reconstruct p
// exactly as sum_k A_k (x - b)^[k].
CentralExpansion to_central_basis(const Polynomial& p, const Rational& b);

// T(n,k) extracted from the series (e^{t/2} - e^{-t/2})^k / k!.
CentralFactorialTable central_T(int max_n);

} // namespace umbra
