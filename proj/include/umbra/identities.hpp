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

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace umbra {

// One failing comparison. n is the primary index; k is the secondary index
// when the identity has one (the inner order k, the order alpha, or the
// sub-identity number for the classical bridges).
struct IdentityFailure {
    int n = 0;
    std::optional<int> k;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string identity;
    int max_order = 0;
    bool passed = false;
    // Empty iff passed. Holds only the first failure unless the run was
    // verbose, in which case every failing index is collected.
    std::vector<IdentityFailure> failures;
    std::chrono::microseconds elapsed{0};

    const IdentityFailure* first_failure() const {
        return failures.empty() ? nullptr : &failures.front();
    }
};

struct VerifyOptions {
    int max_n = 12;
    int k_max = 6;
    std::vector<int> alpha_set = {-3, -2, -1, 0, 1, 2, 3};
    bool verbose = false;
    // Test hook used by the fault-injection checks: adds 1 to one entry of
    // the Stirling-1 triangle the verifiers consume.
    bool corrupt_stirling1 = false;
};

// Type 2 Changhee from type 2 Euler through the Stirling-1 transform:
// c_n(x) = sum_l E*_l(x) S1(n,l).
VerificationReport verify_thm1(const VerifyOptions& opts);
// The inverse transform: E*_n(x) = sum_l S2(n,l) c_l(x).
VerificationReport verify_thm2(const VerifyOptions& opts);
// Central factorial numbers from negative-order type 2 Changhee numbers:
// T(n,k) = 2^{k-n}/k! * sum_l S2(n,l) c_l^{(-k)} for n >= k, with the sum
// vanishing for n < k.
VerificationReport verify_thm3(const VerifyOptions& opts);
// The (e^{t/2} - e^{-t/2})^k / k! series carries T(n,k) as its EGF
// coefficients; checked against both the table and the central-difference
// expansion of x^n.
VerificationReport verify_prop1(const VerifyOptions& opts);
// Type 2 Bernoulli from type 2 Daehee: b_n(x) = sum_l S2(n,l) d_l(x), plus
// the number specialization.
VerificationReport verify_thm4(const VerifyOptions& opts);
// The inverse transform: d_n(x) = sum_l S1(n,l) b_l(x), plus numbers.
VerificationReport verify_thm5(const VerifyOptions& opts);
// 2^{n+k} T(n+k,k) = binom(n+k,k) sum_l d_l^{(-k)} S2(n,l).
VerificationReport verify_thm6(const VerifyOptions& opts);
// 2^{n+k} T(n+k,k) = binom(n+k,k) b_n^{(-k)}.
VerificationReport verify_thm7(const VerifyOptions& opts);
// The order-alpha Stirling-transform pair between type 2 Bernoulli and
// type 2 Daehee polynomials, for every alpha in the option set.
VerificationReport verify_cor1(const VerifyOptions& opts);
// Classical bridges: E*_n(x) = 2^n E_n((x+1)/2), b_n(x) = 2^{n-1} B_n((x+1)/2),
// E_n(x) = sum_l S2(n,l) Ch_l(x), Ch_n(x) = sum_l E_l(x) S1(n,l).
VerificationReport verify_scalings(const VerifyOptions& opts);

const std::vector<std::string>& identity_names();
VerificationReport verify_identity(const std::string& name, const VerifyOptions& opts);
std::vector<VerificationReport> verify_all(const VerifyOptions& opts);

} // namespace umbra
