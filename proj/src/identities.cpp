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

#include "umbra/identities.hpp"

#include <functional>
#include <stdexcept>

#include "umbra/central.hpp"
#include "umbra/families.hpp"
#include "umbra/series.hpp"

namespace umbra {

namespace {

std::string render(const Rational& v) { return v.str(); }
std::string render(const Polynomial& v) { return v.str(); }

// Collects failures and handles the stop-at-first-failure policy.
struct Checker {
    VerificationReport& report;
    bool verbose;

    bool done() const { return !verbose && !report.failures.empty(); }

    template <typename V>
    void check(int n, std::optional<int> k, const V& lhs, const V& rhs) {
        if (done())
            return;
        if (!(lhs == rhs))
            report.failures.push_back({n, k, render(lhs), render(rhs)});
    }
};

VerificationReport run(const std::string& name, const VerifyOptions& opts,
                       const std::function<void(Checker&)>& body) {
    if (opts.max_n < 0 || opts.k_max < 0)
        throw std::invalid_argument("verify: max_n and k_max must be non-negative");
    VerificationReport report;
    report.identity = name;
    report.max_order = opts.max_n;
    Checker checker{report, opts.verbose};
    const auto start = std::chrono::steady_clock::now();
    body(checker);
    report.elapsed =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    report.passed = report.failures.empty();
    return report;
}

// Generating functions are expanded with a small margin beyond the largest
// index any verifier reads.
int internal_order(const VerifyOptions& opts, bool uses_k) {
    return opts.max_n + (uses_k ? opts.k_max : 0) + 2;
}

Triangle s1_table(int max_n, const VerifyOptions& opts) {
    Triangle t = stirling1(max_n);
    if (opts.corrupt_stirling1 && max_n >= 2)
        t[2][1] += Rational(1);
    return t;
}

Polynomial combo(const Triangle& tri, const std::vector<Polynomial>& polys, int n) {
    Polynomial acc;
    for (int l = 0; l <= n; ++l)
        acc += polys[static_cast<size_t>(l)] * tri[static_cast<size_t>(n)][static_cast<size_t>(l)];
    return acc;
}

Rational combo(const Triangle& tri, const std::vector<Rational>& nums, int n) {
    Rational acc;
    for (int l = 0; l <= n; ++l)
        acc += nums[static_cast<size_t>(l)] * tri[static_cast<size_t>(n)][static_cast<size_t>(l)];
    return acc;
}

// EGF coefficients of (((1+t) - (1+t)^{-1}) / 2)^k, the sequence that the
// T(n,k) identity composes through the Stirling-2 triangle. The family's
// defining quotient uses the sum (1+t) + (1+t)^{-1}; under t -> e^{t/2} - 1
// only the difference form turns into (e^{t/2} - e^{-t/2})^k / 2^k, so the
// identity connects through these coefficients rather than the order -k
// entries of the sum-form family.
std::vector<Rational> difference_form_changhee_numbers(int max_n, int k) {
    using SR = Series<Rational>;
    const SR u = SR::one(max_n) + SR::t(max_n);
    const SR base = scale(u - div(SR::one(max_n), u), Rational(1, 2));
    const SR pw = pow_int(base, k);
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n)
        out.push_back(pw.egf_coeff(n));
    return out;
}

} // namespace

VerificationReport verify_thm1(const VerifyOptions& opts) {
    return run("thm1", opts, [&](Checker& c) {
        const int m = internal_order(opts, false);
        const auto chg = type2_changhee_polys(m);
        const auto estar = type2_euler_polys(m);
        const auto s1 = s1_table(m, opts);
        for (int n = 0; n <= opts.max_n && !c.done(); ++n)
            c.check(n, std::nullopt, chg[static_cast<size_t>(n)], combo(s1, estar, n));
    });
}

VerificationReport verify_thm2(const VerifyOptions& opts) {
    return run("thm2", opts, [&](Checker& c) {
        const int m = internal_order(opts, false);
        const auto chg = type2_changhee_polys(m);
        const auto estar = type2_euler_polys(m);
        const auto s2 = stirling2(m);
        for (int n = 0; n <= opts.max_n && !c.done(); ++n)
            c.check(n, std::nullopt, estar[static_cast<size_t>(n)], combo(s2, chg, n));
    });
}

VerificationReport verify_thm3(const VerifyOptions& opts) {
    return run("thm3", opts, [&](Checker& c) {
        const int m = internal_order(opts, true);
        const auto s2 = stirling2(m);
        const auto table = central_T(m);
        for (int k = 0; k <= opts.k_max && !c.done(); ++k) {
            const auto nums = difference_form_changhee_numbers(m, k);
            const Rational prefactor =
                Rational::pow2(k) / Rational::factorial(static_cast<unsigned long>(k));
            for (int n = 0; n <= opts.max_n && !c.done(); ++n) {
                const Rational sum = combo(s2, nums, n);
                if (n >= k)
                    c.check(n, k, table.at(n, k), prefactor * Rational::pow2(-n) * sum);
                else
                    c.check(n, k, Rational(0), sum);
            }
        }
    });
}

VerificationReport verify_prop1(const VerifyOptions& opts) {
    return run("prop1", opts, [&](Checker& c) {
        const int m = internal_order(opts, true);
        const auto table = central_T(m);

        // Independent route: the central-difference expansion of x^n.
        std::vector<CentralExpansion> expansions;
        expansions.reserve(static_cast<size_t>(opts.max_n) + 1);
        for (int n = 0; n <= opts.max_n; ++n)
            expansions.push_back(to_central_basis(Polynomial::monomial(n), Rational(0)));

        using SR = Series<Rational>;
        const SR em1 = exp_of(SR::t(m)) - SR::one(m);
        const SR sym = scale_arg(em1, Rational(1, 2)) - scale_arg(em1, Rational(-1, 2));
        SR pw = SR::one(m);
        Rational inv_fact(1);
        for (int k = 0; k <= opts.k_max && !c.done(); ++k) {
            if (k > 0) {
                pw = pw * sym;
                inv_fact /= Rational(k);
            }
            for (int n = 0; n <= opts.max_n && !c.done(); ++n) {
                const Rational egf = pw.egf_coeff(n) * inv_fact;
                if (n < k) {
                    c.check(n, k, Rational(0), egf);
                } else {
                    c.check(n, k, table.at(n, k), egf);
                    c.check(n, k, table.at(n, k),
                            expansions[static_cast<size_t>(n)].coeffs[static_cast<size_t>(k)]);
                }
            }
        }
    });
}

VerificationReport verify_thm4(const VerifyOptions& opts) {
    return run("thm4", opts, [&](Checker& c) {
        const int m = internal_order(opts, false);
        const auto bern = type2_bernoulli_polys(m);
        const auto dae = type2_daehee_polys(m);
        const auto s2 = stirling2(m);
        const auto bern_nums = type2_bernoulli_numbers(m);
        const auto dae_nums = type2_daehee_numbers(m);
        for (int n = 0; n <= opts.max_n && !c.done(); ++n) {
            c.check(n, std::nullopt, bern[static_cast<size_t>(n)], combo(s2, dae, n));
            c.check(n, std::nullopt, bern_nums[static_cast<size_t>(n)], combo(s2, dae_nums, n));
        }
    });
}

VerificationReport verify_thm5(const VerifyOptions& opts) {
    return run("thm5", opts, [&](Checker& c) {
        const int m = internal_order(opts, false);
        const auto bern = type2_bernoulli_polys(m);
        const auto dae = type2_daehee_polys(m);
        const auto s1 = s1_table(m, opts);
        const auto bern_nums = type2_bernoulli_numbers(m);
        const auto dae_nums = type2_daehee_numbers(m);
        for (int n = 0; n <= opts.max_n && !c.done(); ++n) {
            c.check(n, std::nullopt, dae[static_cast<size_t>(n)], combo(s1, bern, n));
            c.check(n, std::nullopt, dae_nums[static_cast<size_t>(n)], combo(s1, bern_nums, n));
        }
    });
}

VerificationReport verify_thm6(const VerifyOptions& opts) {
    return run("thm6", opts, [&](Checker& c) {
        const int m = internal_order(opts, true);
        const auto s2 = stirling2(m);
        const auto table = central_T(m);
        for (int k = 0; k <= opts.k_max && !c.done(); ++k) {
            const auto nums = type2_daehee_numbers(m, -k);
            for (int n = 0; n <= opts.max_n && !c.done(); ++n) {
                const Rational lhs = Rational::pow2(n + k) * table.at(n + k, k);
                const Rational rhs =
                    Rational::binomial(static_cast<unsigned long>(n + k), static_cast<unsigned long>(k)) *
                    combo(s2, nums, n);
                c.check(n, k, lhs, rhs);
            }
        }
    });
}

VerificationReport verify_thm7(const VerifyOptions& opts) {
    return run("thm7", opts, [&](Checker& c) {
        const int m = internal_order(opts, true);
        const auto table = central_T(m);
        for (int k = 0; k <= opts.k_max && !c.done(); ++k) {
            const auto nums = type2_bernoulli_numbers(m, -k);
            for (int n = 0; n <= opts.max_n && !c.done(); ++n) {
                const Rational lhs = Rational::pow2(n + k) * table.at(n + k, k);
                const Rational rhs =
                    Rational::binomial(static_cast<unsigned long>(n + k), static_cast<unsigned long>(k)) *
                    nums[static_cast<size_t>(n)];
                c.check(n, k, lhs, rhs);
            }
        }
    });
}

VerificationReport verify_cor1(const VerifyOptions& opts) {
    return run("cor1", opts, [&](Checker& c) {
        const int m = internal_order(opts, false);
        const auto s1 = s1_table(m, opts);
        const auto s2 = stirling2(m);
        for (const int alpha : opts.alpha_set) {
            if (c.done())
                break;
            const auto bern = type2_bernoulli_polys(m, alpha);
            const auto dae = type2_daehee_polys(m, alpha);
            for (int n = 0; n <= opts.max_n && !c.done(); ++n) {
                c.check(n, alpha, bern[static_cast<size_t>(n)], combo(s2, dae, n));
                c.check(n, alpha, dae[static_cast<size_t>(n)], combo(s1, bern, n));
            }
        }
    });
}

VerificationReport verify_scalings(const VerifyOptions& opts) {
    return run("scalings", opts, [&](Checker& c) {
        const int m = internal_order(opts, false);
        const auto euler = euler_polys(m);
        const auto estar = type2_euler_polys(m);
        const auto bern = bernoulli_polys(m);
        const auto bern2 = type2_bernoulli_polys(m);
        const auto chg = changhee_polys(m);
        const auto s1 = s1_table(m, opts);
        const auto s2 = stirling2(m);
        const Rational half(1, 2);
        for (int n = 0; n <= opts.max_n && !c.done(); ++n) {
            const auto& en = euler[static_cast<size_t>(n)];
            const auto& bn = bern[static_cast<size_t>(n)];
            c.check(n, 0, estar[static_cast<size_t>(n)],
                    en.compose_affine(half, half) * Rational::pow2(n));
            c.check(n, 1, bern2[static_cast<size_t>(n)],
                    bn.compose_affine(half, half) * Rational::pow2(n - 1));
            c.check(n, 2, en, combo(s2, chg, n));
            c.check(n, 3, chg[static_cast<size_t>(n)], combo(s1, euler, n));
        }
    });
}

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = {
        "thm1", "thm2", "thm3", "thm4", "thm5", "thm6", "thm7", "prop1", "cor1", "scalings",
    };
    return names;
}

VerificationReport verify_identity(const std::string& name, const VerifyOptions& opts) {
    if (name == "thm1") return verify_thm1(opts);
    if (name == "thm2") return verify_thm2(opts);
    if (name == "thm3") return verify_thm3(opts);
    if (name == "thm4") return verify_thm4(opts);
    if (name == "thm5") return verify_thm5(opts);
    if (name == "thm6") return verify_thm6(opts);
    if (name == "thm7") return verify_thm7(opts);
    if (name == "prop1") return verify_prop1(opts);
    if (name == "cor1") return verify_cor1(opts);
    if (name == "scalings") return verify_scalings(opts);
    throw std::invalid_argument("unknown identity '" + name + "'");
}

std::vector<VerificationReport> verify_all(const VerifyOptions& opts) {
    std::vector<VerificationReport> reports;
    reports.reserve(identity_names().size());
    for (const auto& name : identity_names())
        reports.push_back(verify_identity(name, opts));
    return reports;
}

} // namespace umbra
