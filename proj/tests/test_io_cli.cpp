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

#include "cli_runner.hpp"
#include "umbra/io.hpp"

using namespace umbra;
using umbra::testing::run_cli;

TEST_CASE("csv round trips are lossless") {
    SUBCASE("triangle") {
        const FamilyTable table = family_table(FamilyId{Family::stirling2, 1}, 8);
        const Triangle parsed = io::triangle_from_csv(io::table_to_csv(table));
        CHECK(parsed == table.triangle);
    }
    SUBCASE("polynomial family") {
        const FamilyTable table = family_table(FamilyId{Family::type2_changhee, 1}, 8);
        const auto parsed = io::polys_from_csv(io::table_to_csv(table));
        CHECK(parsed == table.polys);
    }
    SUBCASE("evaluated family") {
        const FamilyTable table = family_table(FamilyId{Family::type2_daehee, -2}, 8);
        const Rational x(3, 7);
        const auto parsed = io::values_from_csv(io::table_to_csv(table, x));
        REQUIRE(parsed.size() == table.polys.size());
        for (size_t n = 0; n < parsed.size(); ++n)
            CHECK(parsed[n] == table.polys[n](x));
    }
}

TEST_CASE("json round trips are lossless") {
    SUBCASE("triangle") {
        const FamilyTable table = family_table(FamilyId{Family::stirling1, 1}, 8);
        const Triangle parsed = io::triangle_from_json(io::table_to_json(table));
        CHECK(parsed == table.triangle);
    }
    SUBCASE("polynomial family") {
        const FamilyTable table = family_table(FamilyId{Family::type2_bernoulli, 2}, 8);
        const auto parsed = io::polys_from_json(io::table_to_json(table));
        CHECK(parsed == table.polys);
    }
    SUBCASE("evaluated family") {
        const FamilyTable table = family_table(FamilyId{Family::changhee, 1}, 6);
        const Rational x(-1, 2);
        const auto parsed = io::values_from_json(io::table_to_json(table, x));
        REQUIRE(parsed.size() == table.polys.size());
        for (size_t n = 0; n < parsed.size(); ++n)
            CHECK(parsed[n] == table.polys[n](x));
    }
}

TEST_CASE("report json follows the schema") {
    VerifyOptions opts;
    opts.max_n = 4;
    const auto report = verify_thm1(opts);
    const auto j = io::report_to_json(report, false);
    CHECK(j.at("identity") == "thm1");
    CHECK(j.at("max_order") == 4);
    CHECK(j.at("passed") == true);
    CHECK(j.at("first_failure").is_null());

    SUBCASE("failure object carries indices and both sides") {
        VerifyOptions bad = opts;
        bad.corrupt_stirling1 = true;
        const auto failing = verify_thm1(bad);
        const auto fj = io::report_to_json(failing, false);
        CHECK(fj.at("passed") == false);
        const auto& f = fj.at("first_failure");
        CHECK(f.at("n") == 2);
        CHECK(f.at("k").is_null());
        CHECK(f.at("lhs").is_string());
        CHECK(f.at("rhs").is_string());
    }
}

TEST_CASE("cli table command") {
    SUBCASE("plain output lists ascending coefficients") {
        const auto r = run_cli("table type2-changhee --max-n 4");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("0: 1\n") != std::string::npos);
        CHECK(r.out.find("1: 0 1\n") != std::string::npos);
        CHECK(r.out.find("2: -1 -1 1\n") != std::string::npos);
    }

    SUBCASE("numbers via --x 0") {
        const auto r = run_cli("table type2-changhee --max-n 4 --x 0");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "0: 1\n1: 0\n2: -1\n3: 3\n4: -6\n");
    }

    SUBCASE("csv triangle contains the expected row") {
        const auto r = run_cli("table stirling2 --max-n 4 --format csv");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("n,k,value\n") == 0);
        CHECK(r.out.find("4,2,7\n") != std::string::npos);
        const Triangle parsed = io::triangle_from_csv(r.out);
        CHECK(parsed == stirling2(4));
    }

    SUBCASE("negative order families") {
        const auto r = run_cli("table type2-bernoulli --order -1 --max-n 2 --x 0");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "0: 2\n1: 0\n2: 2/3\n");
    }

    SUBCASE("json parses back to the exact table") {
        const auto r = run_cli("table type2-daehee --order -2 --max-n 6 --format json");
        CHECK(r.exit_code == 0);
        const auto parsed = io::polys_from_json(nlohmann::json::parse(r.out));
        CHECK(parsed == type2_daehee_polys(6, -2));
    }

    SUBCASE("usage errors exit with 2") {
        CHECK(run_cli("table no-such-family").exit_code == 2);
        CHECK(run_cli("table euler --order 3").exit_code == 2);
        CHECK(run_cli("table euler --x 1/0").exit_code == 2);
        CHECK(run_cli("nonsense-command").exit_code == 2);
    }
}

TEST_CASE("cli verify command") {
    SUBCASE("single identity passes quickly") {
        const auto r = run_cli("verify --identity thm7 --max-n 10 --k-max 5");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("thm7: PASS") == 0);
    }

    SUBCASE("json output parses against the schema") {
        const auto r = run_cli("verify --identity thm3 --max-n 6 --k-max 3 --format json");
        CHECK(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        REQUIRE(j.is_array());
        REQUIRE(j.size() == 1);
        CHECK(j[0].at("identity") == "thm3");
        CHECK(j[0].at("passed") == true);
        CHECK(j[0].at("first_failure").is_null());
    }

    SUBCASE("full run with an injected fault fails with populated failure") {
        const auto r = run_cli("verify --identity all --max-n 6 --k-max 2 --format json --inject-fault");
        CHECK(r.exit_code == 1);
        const auto j = nlohmann::json::parse(r.out);
        bool saw_failure = false;
        for (const auto& rep : j)
            if (rep.at("passed") == false) {
                saw_failure = true;
                CHECK(!rep.at("first_failure").is_null());
                CHECK(rep.at("first_failure").at("lhs").is_string());
            }
        CHECK(saw_failure);
    }

    SUBCASE("unknown identity exits with 2") {
        CHECK(run_cli("verify --identity thm99").exit_code == 2);
    }

    SUBCASE("alpha set accepts lists and ranges") {
        CHECK(run_cli("verify --identity cor1 --max-n 4 --alpha-set -2..2").exit_code == 0);
        CHECK(run_cli("verify --identity cor1 --max-n 4 --alpha-set -4,0,5").exit_code == 0);
        CHECK(run_cli("verify --identity cor1 --max-n 4 --alpha-set nope").exit_code == 2);
    }
}
