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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "umbra/families.hpp"
#include "umbra/identities.hpp"
#include "umbra/io.hpp"

using namespace umbra;

TEST_CASE("every identity passes at desk scale") {
    const VerifyOptions opts; // defaults: max_n 12, k_max 6, alpha -3..3
    for (const auto& report : verify_all(opts)) {
        INFO("identity ", report.identity);
        CHECK(report.passed);
        CHECK(report.failures.empty());
        CHECK(report.first_failure() == nullptr);
        CHECK(report.max_order == 12);
    }
}

TEST_CASE("individual dispatch matches the suite") {
    VerifyOptions opts;
    opts.max_n = 6;
    opts.k_max = 3;
    opts.alpha_set = {-1, 0, 2};
    for (const auto& name : identity_names()) {
        const auto report = verify_identity(name, opts);
        CHECK(report.identity == name);
        CHECK(report.passed);
    }
    CHECK_THROWS_AS(verify_identity("thm99", opts), std::invalid_argument);
}

TEST_CASE("reports are deterministic") {
    VerifyOptions opts;
    opts.max_n = 8;
    opts.k_max = 4;
    const auto a = verify_all(opts);
    const auto b = verify_all(opts);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i)
        CHECK(io::report_to_json(a[i], false) == io::report_to_json(b[i], false));
}

TEST_CASE("corrupting the stirling-1 table breaks the transforms that use it") {
    VerifyOptions opts;
    opts.max_n = 6;
    opts.corrupt_stirling1 = true;

    const auto broken = verify_thm1(opts);
    CHECK(!broken.passed);
    REQUIRE(broken.first_failure() != nullptr);
    CHECK(broken.first_failure()->n == 2);

    const auto thm5 = verify_thm5(opts);
    CHECK(!thm5.passed);

    // The inverse-direction transforms never touch the corrupted table.
    CHECK(verify_thm2(opts).passed);
    CHECK(verify_thm4(opts).passed);

    SUBCASE("verbose collects every failing index") {
        // The corrupted row enters once per alpha, so the verbose report
        // gathers one failure per order while the quiet run stops at the
        // first.
        opts.verbose = true;
        const auto verbose = verify_cor1(opts);
        CHECK(verbose.failures.size() == opts.alpha_set.size());
        VerifyOptions quiet = opts;
        quiet.verbose = false;
        CHECK(verify_cor1(quiet).failures.size() == 1);
    }
}

TEST_CASE("the two stirling transforms invert each other on the family tables") {
    const int n_max = 10;
    const auto chg = type2_changhee_polys(n_max);
    const auto estar = type2_euler_polys(n_max);
    const Triangle s1 = stirling1(n_max);
    const Triangle s2 = stirling2(n_max);

    // Push the type 2 Euler table through the first transform and back.
    std::vector<Polynomial> via_s1(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        for (int l = 0; l <= n; ++l)
            via_s1[static_cast<size_t>(n)] +=
                estar[static_cast<size_t>(l)] * s1[static_cast<size_t>(n)][static_cast<size_t>(l)];
    std::vector<Polynomial> back(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        for (int l = 0; l <= n; ++l)
            back[static_cast<size_t>(n)] +=
                via_s1[static_cast<size_t>(l)] * s2[static_cast<size_t>(n)][static_cast<size_t>(l)];

    for (int n = 0; n <= n_max; ++n) {
        CHECK(via_s1[static_cast<size_t>(n)] == chg[static_cast<size_t>(n)]);
        CHECK(back[static_cast<size_t>(n)] == estar[static_cast<size_t>(n)]);
    }
}

TEST_CASE("negative max_n is rejected") {
    VerifyOptions opts;
    opts.max_n = -1;
    CHECK_THROWS_AS(verify_thm1(opts), std::invalid_argument);
}
