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

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "umbra/families.hpp"
#include "umbra/identities.hpp"
#include "umbra/io.hpp"

namespace {

// Exit codes are a CI contract: 0 success, 1 identity failure, 2 usage error.
constexpr int exit_ok = 0;
constexpr int exit_identity_failed = 1;
constexpr int exit_usage = 2;

std::vector<int> parse_alpha_set(const std::string& spec) {
    std::vector<int> alphas;
    const auto range_pos = spec.find("..");
    if (range_pos != std::string::npos) {
        const int lo = std::stoi(spec.substr(0, range_pos));
        const int hi = std::stoi(spec.substr(range_pos + 2));
        if (lo > hi)
            throw std::invalid_argument("alpha-set: empty range '" + spec + "'");
        for (int a = lo; a <= hi; ++a)
            alphas.push_back(a);
        return alphas;
    }
    std::string part;
    std::istringstream in(spec);
    while (std::getline(in, part, ','))
        alphas.push_back(std::stoi(part));
    if (alphas.empty())
        throw std::invalid_argument("alpha-set: empty set");
    return alphas;
}

int run_table(const std::string& family_name, int order, int max_n,
              const std::optional<std::string>& x_text, const std::string& format) {
    const auto family = umbra::FamilyId::parse_family(family_name);
    if (!family) {
        std::cerr << "error: unknown family '" << family_name << "'\n";
        return exit_usage;
    }
    umbra::FamilyId id{*family, order};
    std::optional<umbra::Rational> x;
    try {
        id.validate();
        if (x_text)
            x = umbra::Rational::from_string(*x_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }

    const auto table = umbra::family_table(id, max_n);
    if (format == "csv") {
        std::cout << (x ? umbra::io::table_to_csv(table, *x) : umbra::io::table_to_csv(table));
    } else if (format == "json") {
        const auto j = x ? umbra::io::table_to_json(table, *x) : umbra::io::table_to_json(table);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << umbra::io::table_to_plain(table, x);
    }
    return exit_ok;
}

int run_verify(const std::string& identity, const umbra::VerifyOptions& opts,
               const std::string& format) {
    std::vector<umbra::VerificationReport> reports;
    try {
        if (identity == "all")
            reports = umbra::verify_all(opts);
        else
            reports.push_back(umbra::verify_identity(identity, opts));
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }

    if (format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : reports)
            out.push_back(umbra::io::report_to_json(r, opts.verbose));
        std::cout << out.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << umbra::io::report_to_csv_header();
        for (const auto& r : reports)
            std::cout << umbra::io::report_to_csv_row(r);
    } else {
        for (const auto& r : reports)
            std::cout << umbra::io::report_to_plain(r, opts.verbose);
    }

    const bool all_passed =
        std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
    return all_passed ? exit_ok : exit_identity_failed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tables and identity checks for central factorial numbers and the "
                 "Changhee/Daehee/Euler/Bernoulli polynomial families"};
    app.require_subcommand(1);

    std::string format = "plain";

    auto* table = app.add_subcommand("table", "Print one family table");
    std::string family_name;
    int table_order = 1;
    int table_max_n = 12;
    std::optional<std::string> x_text;
    table->add_option("family", family_name, "Family name, e.g. type2-changhee")->required();
    table->add_option("--order", table_order, "Integer order for the order-variant families");
    table->add_option("--max-n", table_max_n, "Largest index to print")
        ->check(CLI::NonNegativeNumber);
    table->add_option("--x", x_text, "Evaluate polynomials at this rational, e.g. 1/2");
    table->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}));

    auto* verify = app.add_subcommand("verify", "Check identities to a requested order");
    std::string identity = "all";
    umbra::VerifyOptions opts;
    std::string alpha_spec = "-3..3";
    verify->add_option("--identity", identity, "One identity name, or 'all'");
    verify->add_option("--max-n", opts.max_n, "Largest index checked")->check(CLI::NonNegativeNumber);
    verify->add_option("--k-max", opts.k_max, "Largest inner order checked")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--alpha-set", alpha_spec, "Orders to check, 'a..b' or comma-separated");
    verify->add_flag("--verbose", opts.verbose, "Collect every failing index, not just the first");
    verify->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    verify->add_flag("--inject-fault", opts.corrupt_stirling1, "Corrupt one Stirling-1 entry")
        ->group(""); // test hook, hidden from --help

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (table->parsed())
            return run_table(family_name, table_order, table_max_n, x_text, format);
        try {
            opts.alpha_set = parse_alpha_set(alpha_spec);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return exit_usage;
        }
        return run_verify(identity, opts, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
