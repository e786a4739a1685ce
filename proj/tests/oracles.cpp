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

#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace umbra::oracle {

namespace {

// Counts restricted growth strings a[0..n-1] whose largest label is k-1,
// i.e. set partitions of an n-set into exactly k blocks.
void count_partitions(int pos, int n, int max_label, int want_blocks, long& count,
                      std::vector<int>& labels) {
    if (pos == n) {
        if (max_label + 1 == want_blocks)
            ++count;
        return;
    }
    for (int label = 0; label <= max_label + 1; ++label) {
        labels[static_cast<size_t>(pos)] = label;
        count_partitions(pos + 1, n, std::max(max_label, label), want_blocks, count, labels);
    }
}

int cycle_count(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i])
            continue;
        ++cycles;
        for (size_t j = i; !seen[j]; j = static_cast<size_t>(perm[j]))
            seen[j] = true;
    }
    return cycles;
}

// Local dense polynomial helpers on plain coefficient vectors.
using Poly = std::vector<Rational>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

// x^[m], expanded from its defining product.
Poly central_factorial_poly(int m) {
    if (m == 0)
        return {Rational(1)};
    Poly p = {Rational(0), Rational(1)};
    for (int j = 1; j < m; ++j)
        p = poly_mul(p, {Rational(m, 2) - Rational(j), Rational(1)});
    return p;
}

} // namespace

long stirling2(int n, int k) {
    if (n < 0 || k < 0 || k > n || n > 12)
        throw std::invalid_argument("oracle stirling2: need 0 <= k <= n <= 12");
    if (n == 0)
        return k == 0 ? 1 : 0;
    long count = 0;
    std::vector<int> labels(static_cast<size_t>(n));
    // First element always opens block 0.
    count_partitions(1, n, 0, k, count, labels);
    return count;
}

long stirling1(int n, int k) {
    if (n < 0 || k < 0 || k > n || n > 9)
        throw std::invalid_argument("oracle stirling1: need 0 <= k <= n <= 9");
    if (n == 0)
        return k == 0 ? 1 : 0;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        if (cycle_count(perm) == k)
            ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return (n - k) % 2 == 0 ? count : -count;
}

Rational central_T(int n, int k) {
    if (n < 0 || k < 0 || k > n || n > 12)
        throw std::invalid_argument("oracle central_T: need 0 <= k <= n <= 12");
    std::vector<Poly> basis;
    basis.reserve(static_cast<size_t>(n) + 1);
    for (int m = 0; m <= n; ++m)
        basis.push_back(central_factorial_poly(m));

    Poly residual(static_cast<size_t>(n) + 1);
    residual[static_cast<size_t>(n)] = Rational(1);
    std::vector<Rational> solution(static_cast<size_t>(n) + 1);
    for (int m = n; m >= 0; --m) {
        // Each basis polynomial is monic of degree m.
        const Rational c = residual[static_cast<size_t>(m)];
        solution[static_cast<size_t>(m)] = c;
        if (!c.is_zero())
            for (size_t i = 0; i < basis[static_cast<size_t>(m)].size(); ++i)
                residual[i] -= c * basis[static_cast<size_t>(m)][i];
    }
    for (const auto& r : residual)
        if (!r.is_zero())
            throw std::logic_error("oracle central_T: back-substitution residue");
    return solution[static_cast<size_t>(k)];
}

std::vector<Rational> compose(const std::vector<Rational>& f, const std::vector<Rational>& g) {
    if (g.empty() || !g[0].is_zero())
        throw std::invalid_argument("oracle compose: inner series must have zero constant term");
    const size_t n = std::min(f.size(), g.size());
    std::vector<Rational> acc(n);
    std::vector<Rational> power(n);
    power[0] = Rational(1);
    for (size_t k = 0; k < n; ++k) {
        if (k > 0) {
            // power <- power * g, truncated
            std::vector<Rational> next(n);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; i + j < n && j < g.size(); ++j)
                    next[i + j] += power[i] * g[j];
            power = std::move(next);
        }
        for (size_t i = 0; i < n; ++i)
            acc[i] += f[k] * power[i];
    }
    return acc;
}

} // namespace umbra::oracle
