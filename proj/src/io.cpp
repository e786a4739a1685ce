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

#include "umbra/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace umbra::io {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(line);
    while (std::getline(in, part, sep))
        parts.push_back(part);
    return parts;
}

std::vector<std::string> nonempty_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty())
            lines.push_back(line);
    }
    return lines;
}

int poly_columns(const FamilyTable& table) {
    int width = 1;
    for (const auto& p : table.polys)
        width = std::max(width, p.degree() + 1);
    return width;
}

nlohmann::json poly_to_json(const Polynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    if (p.is_zero()) {
        coeffs.push_back("0");
        return coeffs;
    }
    for (const auto& c : p.coeffs())
        coeffs.push_back(c.str());
    return coeffs;
}

Polynomial poly_from_strings(const std::vector<std::string>& parts, size_t from) {
    std::vector<Rational> coeffs;
    coeffs.reserve(parts.size() - from);
    for (size_t i = from; i < parts.size(); ++i)
        coeffs.push_back(Rational::from_string(parts[i]));
    return Polynomial(std::move(coeffs));
}

nlohmann::json failure_to_json(const IdentityFailure& f) {
    nlohmann::json j;
    j["n"] = f.n;
    if (f.k)
        j["k"] = *f.k;
    else
        j["k"] = nullptr;
    j["lhs"] = f.lhs;
    j["rhs"] = f.rhs;
    return j;
}

} // namespace

std::string triangle_to_csv(const Triangle& triangle) {
    std::ostringstream out;
    out << "n,k,value\n";
    for (size_t n = 0; n < triangle.size(); ++n)
        for (size_t k = 0; k < triangle[n].size(); ++k)
            out << n << ',' << k << ',' << triangle[n][k].str() << '\n';
    return out.str();
}

std::string table_to_csv(const FamilyTable& table) {
    if (table.is_triangular())
        return triangle_to_csv(table.triangle);
    std::ostringstream out;
    const int width = poly_columns(table);
    out << 'n';
    for (int i = 0; i < width; ++i)
        out << ",coeff" << i;
    out << '\n';
    for (size_t n = 0; n < table.polys.size(); ++n) {
        out << n;
        for (int i = 0; i < width; ++i)
            out << ',' << table.polys[n].coeff(i).str();
        out << '\n';
    }
    return out.str();
}

std::string table_to_csv(const FamilyTable& table, const Rational& x) {
    if (table.is_triangular())
        return table_to_csv(table);
    std::ostringstream out;
    out << "n,value\n";
    for (size_t n = 0; n < table.polys.size(); ++n)
        out << n << ',' << table.polys[n](x).str() << '\n';
    return out.str();
}

Triangle triangle_from_csv(const std::string& text) {
    const auto lines = nonempty_lines(text);
    if (lines.empty() || lines[0] != "n,k,value")
        throw std::invalid_argument("csv: expected header 'n,k,value'");
    Triangle tri;
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto parts = split(lines[i], ',');
        if (parts.size() != 3)
            throw std::invalid_argument("csv: malformed triangle row '" + lines[i] + "'");
        const size_t n = std::stoul(parts[0]);
        const size_t k = std::stoul(parts[1]);
        if (tri.size() <= n)
            tri.resize(n + 1);
        if (tri[n].size() <= k)
            tri[n].resize(k + 1);
        tri[n][k] = Rational::from_string(parts[2]);
    }
    return tri;
}

std::vector<Polynomial> polys_from_csv(const std::string& text) {
    const auto lines = nonempty_lines(text);
    if (lines.empty() || lines[0].rfind("n,coeff0", 0) != 0)
        throw std::invalid_argument("csv: expected polynomial header");
    std::vector<Polynomial> polys;
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto parts = split(lines[i], ',');
        if (parts.size() < 2)
            throw std::invalid_argument("csv: malformed polynomial row '" + lines[i] + "'");
        polys.push_back(poly_from_strings(parts, 1));
    }
    return polys;
}

std::vector<Rational> values_from_csv(const std::string& text) {
    const auto lines = nonempty_lines(text);
    if (lines.empty() || lines[0] != "n,value")
        throw std::invalid_argument("csv: expected header 'n,value'");
    std::vector<Rational> values;
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto parts = split(lines[i], ',');
        if (parts.size() != 2)
            throw std::invalid_argument("csv: malformed value row '" + lines[i] + "'");
        values.push_back(Rational::from_string(parts[1]));
    }
    return values;
}

nlohmann::json table_to_json(const FamilyTable& table) {
    nlohmann::json j;
    j["family"] = table.id.name();
    j["order"] = table.id.order;
    j["max_n"] = table.max_n;
    if (table.is_triangular()) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : table.triangle) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& v : row)
                r.push_back(v.str());
            rows.push_back(r);
        }
        j["triangle"] = rows;
    } else {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& p : table.polys)
            rows.push_back(poly_to_json(p));
        j["values"] = rows;
    }
    return j;
}

nlohmann::json table_to_json(const FamilyTable& table, const Rational& x) {
    if (table.is_triangular())
        return table_to_json(table);
    nlohmann::json j;
    j["family"] = table.id.name();
    j["order"] = table.id.order;
    j["max_n"] = table.max_n;
    j["x"] = x.str();
    nlohmann::json values = nlohmann::json::array();
    for (const auto& p : table.polys)
        values.push_back(p(x).str());
    j["values"] = values;
    return j;
}

Triangle triangle_from_json(const nlohmann::json& j) {
    Triangle tri;
    for (const auto& row : j.at("triangle")) {
        std::vector<Rational> r;
        for (const auto& v : row)
            r.push_back(Rational::from_string(v.get<std::string>()));
        tri.push_back(std::move(r));
    }
    return tri;
}

std::vector<Polynomial> polys_from_json(const nlohmann::json& j) {
    std::vector<Polynomial> polys;
    for (const auto& row : j.at("values")) {
        std::vector<Rational> coeffs;
        for (const auto& v : row)
            coeffs.push_back(Rational::from_string(v.get<std::string>()));
        polys.push_back(Polynomial(std::move(coeffs)));
    }
    return polys;
}

std::vector<Rational> values_from_json(const nlohmann::json& j) {
    std::vector<Rational> values;
    for (const auto& v : j.at("values"))
        values.push_back(Rational::from_string(v.get<std::string>()));
    return values;
}

std::string table_to_plain(const FamilyTable& table, const std::optional<Rational>& x) {
    std::ostringstream out;
    if (table.is_triangular()) {
        for (size_t n = 0; n < table.triangle.size(); ++n) {
            out << n << ':';
            for (const auto& v : table.triangle[n])
                out << ' ' << v.str();
            out << '\n';
        }
        return out.str();
    }
    for (size_t n = 0; n < table.polys.size(); ++n) {
        out << n << ':';
        if (x) {
            out << ' ' << table.polys[n](*x).str();
        } else if (table.polys[n].is_zero()) {
            out << " 0";
        } else {
            for (const auto& c : table.polys[n].coeffs())
                out << ' ' << c.str();
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::json report_to_json(const VerificationReport& report, bool verbose) {
    nlohmann::json j;
    j["identity"] = report.identity;
    j["max_order"] = report.max_order;
    j["passed"] = report.passed;
    if (const auto* f = report.first_failure())
        j["first_failure"] = failure_to_json(*f);
    else
        j["first_failure"] = nullptr;
    if (verbose) {
        nlohmann::json all = nlohmann::json::array();
        for (const auto& f : report.failures)
            all.push_back(failure_to_json(f));
        j["failures"] = all;
    }
    return j;
}

std::string report_to_plain(const VerificationReport& report, bool verbose) {
    std::ostringstream out;
    out << report.identity << ": " << (report.passed ? "PASS" : "FAIL") << " (max_n="
        << report.max_order << ", " << report.elapsed.count() / 1000.0 << " ms)";
    if (const auto* f = report.first_failure()) {
        out << " first failure at n=" << f->n;
        if (f->k)
            out << ", k=" << *f->k;
        out << ": lhs=" << f->lhs << " rhs=" << f->rhs;
    }
    out << '\n';
    if (verbose)
        for (size_t i = 1; i < report.failures.size(); ++i) {
            const auto& f = report.failures[i];
            out << "  also n=" << f.n;
            if (f.k)
                out << ", k=" << *f.k;
            out << ": lhs=" << f.lhs << " rhs=" << f.rhs << '\n';
        }
    return out.str();
}

std::string report_to_csv_header() { return "identity,max_order,passed,n,k,lhs,rhs\n"; }

std::string report_to_csv_row(const VerificationReport& report) {
    std::ostringstream out;
    out << report.identity << ',' << report.max_order << ',' << (report.passed ? "true" : "false");
    if (const auto* f = report.first_failure()) {
        out << ',' << f->n << ',';
        if (f->k)
            out << *f->k;
        out << ',' << f->lhs << ',' << f->rhs;
    } else {
        out << ",,,,";
    }
    out << '\n';
    return out.str();
}

} // namespace umbra::io
