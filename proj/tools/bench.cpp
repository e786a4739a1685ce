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

// Times the serial reference kernel against the OpenMP kernel on series
// products with factorially growing coefficients, and reports how far the
// family tables' numerators/denominators grow at larger truncation orders.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "umbra/families.hpp"
#include "umbra/series.hpp"

using namespace umbra;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point start) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

std::size_t max_bits(const std::vector<Rational>& values) {
    std::size_t bits = 0;
    for (const auto& v : values)
        bits = std::max({bits, v.num_bits(), v.den_bits()});
    return bits;
}

void print_row(const std::string& name, double ms, std::size_t bits) {
    std::cout << "  " << name << std::string(name.size() < 18 ? 18 - name.size() : 1, ' ') << ms
              << " ms, max coeff bits " << bits << "\n";
}

void family_construction_report(int max_n) {
    std::cout << "family construction at max_n=" << max_n << " (scalar ring)\n";
    const auto start_all = clock_type::now();
    {
        const auto t0 = clock_type::now();
        const auto tri = stirling2(max_n);
        print_row("stirling2", ms_since(t0), max_bits(tri.back()));
    }
    {
        const auto t0 = clock_type::now();
        const auto tri = stirling1(max_n);
        print_row("stirling1", ms_since(t0), max_bits(tri.back()));
    }
    for (const char* name : {"euler", "bernoulli", "type2-euler", "type2-bernoulli", "changhee",
                             "type2-changhee", "daehee", "type2-daehee"}) {
        const auto t0 = clock_type::now();
        const auto values = family_numbers(FamilyId{*FamilyId::parse_family(name), 1}, max_n);
        print_row(name, ms_since(t0), max_bits(values));
    }
    std::cout << "  total " << ms_since(start_all) << " ms\n\n";
}

// Heavy operand: 1 / ((e^t - e^{-t})/t) has factorially growing numerators,
// so each coefficient multiply is real GMP work.
Series<Rational> heavy_operand(int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    Rational f(1);
    for (int i = 0; i <= order; ++i) {
        f /= Rational(i + 1);
        if (i % 2 == 0)
            c[static_cast<size_t>(i)] = Rational(2) * f;
    }
    return div(Series<Rational>::one(order), Series<Rational>(order, std::move(c)));
}

void kernel_comparison(int order) {
    const auto a = heavy_operand(order);
    const auto t0 = clock_type::now();
    const auto serial = mul_serial(a, a);
    const double t_serial = ms_since(t0);
    const auto t1 = clock_type::now();
    const auto parallel = mul_parallel(a, a);
    const double t_parallel = ms_since(t1);
    std::cout << "  order " << order << ": serial " << t_serial << " ms, parallel " << t_parallel
              << " ms" << (serial == parallel ? "" : "  [MISMATCH]") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    int max_n = 64;
    if (argc > 1)
        max_n = std::stoi(argv[1]);

#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n\n";
#else
    std::cout << "openmp: not enabled, parallel kernel falls back to serial\n\n";
#endif

    family_construction_report(max_n);

    std::cout << "cauchy product, serial vs parallel kernel\n";
    for (int order : {64, 128, 256, 512})
        kernel_comparison(order);
    return 0;
}
