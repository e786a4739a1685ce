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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umbra/polynomial.hpp"
#include "umbra/rational.hpp"

namespace umbra {

enum class Family {
    stirling1,
    stirling2,
    euler,
    type2_euler,
    bernoulli,
    type2_bernoulli,
    changhee,
    type2_changhee,
    daehee,
    type2_daehee,
};

// A family plus its integer order. Only the type 2 Bernoulli, Changhee and
// Daehee families admit order variants; everything else requires order 1.
struct FamilyId {
    Family family = Family::stirling2;
    int order = 1;

    bool has_order_variants() const {
        return family == Family::type2_bernoulli || family == Family::type2_changhee ||
               family == Family::type2_daehee;
    }
    bool is_triangular() const {
        return family == Family::stirling1 || family == Family::stirling2;
    }
    // Throws std::invalid_argument when order != 1 on a family without
    // order variants.
    void validate() const;
    std::string name() const;

    static std::optional<Family> parse_family(std::string_view name);
    friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

using Triangle = std::vector<std::vector<Rational>>;

// Values of one family up to max_n: a triangle for the Stirling families,
// otherwise one polynomial per index (numbers are the values at x = 0).
struct FamilyTable {
    FamilyId id;
    int max_n = 0;
    std::vector<Polynomial> polys;
    Triangle triangle;

    bool is_triangular() const { return id.is_triangular(); }
};

// Triangles from their generating functions: (e^t - 1)^k / k! for the second
// kind, (log(1+t))^k / k! (signed) for the first kind.
Triangle stirling2(int max_n);
Triangle stirling1(int max_n);

// Polynomial families, extracted from exponential generating functions built
// in the series engine. Each has a number-sequence entry point computed in
// the scalar ring (the x = 0 specialization).
std::vector<Polynomial> euler_polys(int max_n);
std::vector<Polynomial> bernoulli_polys(int max_n);
std::vector<Polynomial> type2_euler_polys(int max_n);
std::vector<Polynomial> changhee_polys(int max_n);
std::vector<Polynomial> daehee_polys(int max_n);
std::vector<Polynomial> type2_changhee_polys(int max_n, int order = 1);
std::vector<Polynomial> type2_bernoulli_polys(int max_n, int order = 1);
std::vector<Polynomial> type2_daehee_polys(int max_n, int order = 1);

std::vector<Rational> euler_numbers(int max_n);
std::vector<Rational> bernoulli_numbers(int max_n);
std::vector<Rational> type2_euler_numbers(int max_n);
std::vector<Rational> changhee_numbers(int max_n);
std::vector<Rational> daehee_numbers(int max_n);
std::vector<Rational> type2_changhee_numbers(int max_n, int order = 1);
std::vector<Rational> type2_bernoulli_numbers(int max_n, int order = 1);
std::vector<Rational> type2_daehee_numbers(int max_n, int order = 1);

// Dispatch on a validated FamilyId.
FamilyTable family_table(const FamilyId& id, int max_n);
std::vector<Rational> family_numbers(const FamilyId& id, int max_n);

} // namespace umbra
