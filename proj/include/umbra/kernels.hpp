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

#include <algorithm>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace umbra::kernels {

// Truncated Cauchy product: out[n] = sum_i a[i] * b[n-i] for n < out.size().
// Serial reference version; kept as the ground truth the parallel kernel is
// checked against.
template <typename R>
void cauchy_serial(const std::vector<R>& a, const std::vector<R>& b, std::vector<R>& out) {
    const int na = static_cast<int>(a.size());
    const int nb = static_cast<int>(b.size());
    const int n_out = static_cast<int>(out.size());
    for (int n = 0; n < n_out; ++n) {
        R acc{};
        const int lo = std::max(0, n - nb + 1);
        const int hi = std::min(n, na - 1);
        for (int i = lo; i <= hi; ++i)
            acc += a[static_cast<size_t>(i)] * b[static_cast<size_t>(n - i)];
        out[static_cast<size_t>(n)] = std::move(acc);
    }
}

// Same contract, one output coefficient per loop iteration. Each iteration
// writes only out[n] and reads shared immutable inputs, so the result is
// bit-identical to the serial kernel.
template <typename R>
void cauchy_parallel(const std::vector<R>& a, const std::vector<R>& b, std::vector<R>& out) {
    const int na = static_cast<int>(a.size());
    const int nb = static_cast<int>(b.size());
    const int n_out = static_cast<int>(out.size());
#pragma omp parallel for schedule(dynamic)
    for (int n = 0; n < n_out; ++n) {
        R acc{};
        const int lo = std::max(0, n - nb + 1);
        const int hi = std::min(n, na - 1);
        for (int i = lo; i <= hi; ++i)
            acc += a[static_cast<size_t>(i)] * b[static_cast<size_t>(n - i)];
        out[static_cast<size_t>(n)] = std::move(acc);
    }
}

// Below this many output coefficients the fork/join overhead exceeds the
// arithmetic; desk-scale work stays on one thread.
inline constexpr int parallel_cutoff = 64;

template <typename R>
void cauchy(const std::vector<R>& a, const std::vector<R>& b, std::vector<R>& out) {
#ifdef _OPENMP
    if (static_cast<int>(out.size()) >= parallel_cutoff && omp_get_max_threads() > 1) {
        cauchy_parallel(a, b, out);
        return;
    }
#endif
    cauchy_serial(a, b, out);
}

} // namespace umbra::kernels
