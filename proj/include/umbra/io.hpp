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
#include <vector>

#include <json.hpp>

#include "umbra/families.hpp"
#include "umbra/identities.hpp"

namespace umbra::io {

// Rationals travel as canonical "p/q" strings ("p" when q = 1); parsing one
// back reproduces the exact value.

// Tables. Triangles use rows "n,k,value"; polynomial families use one row
// per index with ascending coefficients padded to a fixed column count; an
// evaluated table (x supplied) uses rows "n,value".
std::string table_to_csv(const FamilyTable& table);
std::string table_to_csv(const FamilyTable& table, const Rational& x);
std::string triangle_to_csv(const Triangle& triangle);
Triangle triangle_from_csv(const std::string& text);
std::vector<Polynomial> polys_from_csv(const std::string& text);
std::vector<Rational> values_from_csv(const std::string& text);

nlohmann::json table_to_json(const FamilyTable& table);
nlohmann::json table_to_json(const FamilyTable& table, const Rational& x);
Triangle triangle_from_json(const nlohmann::json& j);
std::vector<Polynomial> polys_from_json(const nlohmann::json& j);
std::vector<Rational> values_from_json(const nlohmann::json& j);

std::string table_to_plain(const FamilyTable& table, const std::optional<Rational>& x);

// Reports. The JSON object is
//   {"identity": string, "max_order": int, "passed": bool,
//    "first_failure": null | {"n": int, "k": int | null,
//                             "lhs": string, "rhs": string}}
// plus a "failures" array when verbose output was requested.
nlohmann::json report_to_json(const VerificationReport& report, bool verbose);
std::string report_to_plain(const VerificationReport& report, bool verbose);
std::string report_to_csv_header();
std::string report_to_csv_row(const VerificationReport& report);

} // namespace umbra::io
