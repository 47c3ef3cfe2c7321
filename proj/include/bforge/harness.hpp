/*
   Copyright 2026 The boundary-forge Authors

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

// Exact verification on polynomial trajectories, plus the curated instance sets.

#ifndef BFORGE_HARNESS_HPP
#define BFORGE_HARNESS_HPP

#include <bforge/constrained.hpp>
#include <bforge/dirac.hpp>
#include <bforge/lagrange.hpp>
#include <bforge/realize.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bforge {

/// One exact residual per trial; rational checks pass only when every residual is zero.
struct VerificationReport {
    std::string check;
    std::string instance;
    Index trials = 0;
    std::vector<Rational> residuals;
    std::vector<double> split_residuals;  // floating-point side checks, if any
    double tolerance = 0.0;
    double elapsed_seconds = 0.0;

    Index failures() const;
    bool passed() const;
};

struct SuiteConfig {
    Index trials = 100;
    std::vector<Index> degrees{0, 2, 6};
    std::uint64_t seed = 1;
    std::optional<std::pair<Rational, Rational>> interval;  // fixed [alpha, beta] instead of random ones
};

/// Coefficients drawn as in RationalSource; alpha < beta are independent random rationals.
Trajectory random_latent(std::uint64_t seed, Index dim, Index degree);

/// Exact int_alpha^beta (e1^T f2 + e2^T f1) dz.
Rational integrate_pairing(const RPolyMatrix& f1, const RPolyMatrix& e1, const RPolyMatrix& f2, const RPolyMatrix& e2,
                           const Rational& alpha, const Rational& beta);

/// int (e1^T f2 + e2^T f1) - [b1^T Sigma b2]_alpha^beta.
Rational dirac_form_residual(const BoundaryStructure& s, const RPolyMatrix& l1, const RPolyMatrix& l2,
                             const Rational& alpha, const Rational& beta);

/// int e^T f - 1/2 [b^T Sigma b]_alpha^beta.
Rational power_balance_residual(const BoundaryStructure& s, const RPolyMatrix& l, const Rational& alpha,
                                const Rational& beta);

/// |int e^T f - [e_d^T f_d]_alpha^beta| with (f_d; e_d) = T b, relative to max(1, size of each term).
double split_balance_error(const BoundaryStructure& s, const PowerSplit& split, const RPolyMatrix& l,
                           const Rational& alpha, const Rational& beta);

VerificationReport check_power_balance(const BoundaryStructure& s, const Trajectory& l,
                                       const std::optional<PowerSplit>& split = std::nullopt);
VerificationReport check_dirac_form(const BoundaryStructure& s, const RPolyMatrix& l1, const RPolyMatrix& l2,
                                    const Rational& alpha, const Rational& beta);

/// d/dz D_Phi(v, w) - D_{(zeta+eta) Phi}(v, w); the residual recorded is its largest |coefficient|.
VerificationReport derivative_rule_check(const RTwoVar& phi, const RPolyMatrix& v, const RPolyMatrix& w);

/// d/dz b - A b - B u and y - C b - D u on the trajectory; residual is the largest |coefficient|.
Rational realization_residual(const RPolyMatrix& z, const PortRows& rows, const Realization& r, const RPolyMatrix& l);

VerificationReport dirac_suite(const BoundaryStructure& s, const SuiteConfig& cfg, const std::string& instance = "");
VerificationReport power_balance_suite(const BoundaryStructure& s, const SuiteConfig& cfg,
                                       const std::optional<PowerSplit>& split, const std::string& instance = "");
VerificationReport constrained_suite(const ConstrainedStructure& s, const SuiteConfig& cfg, const std::string& instance = "");
VerificationReport lagrange_suite(const LagrangeBoundary& b, const SuiteConfig& cfg, const std::string& instance = "");
VerificationReport realization_suite(const BoundaryStructure& s, const Realization& r, const SuiteConfig& cfg,
                                     const std::string& instance = "");
VerificationReport realization_suite(const LagrangeBoundary& b, const Realization& r, const SuiteConfig& cfg,
                                     const std::string& instance = "");

/// A kernel pair (F, E), or a skew-adjoint J when `j` is set.
struct DiracInstance {
    std::string name;
    RPolyMatrix f;
    RPolyMatrix e;
    std::optional<RPolyMatrix> j;
};

BoundaryStructure build_structure(const DiracInstance& inst);

struct ConstrainedInstance {
    std::string name;
    RPolyMatrix j;
    RPolyMatrix g;
};

struct LagrangeInstance {
    std::string name;
    RPolyMatrix p;
    RPolyMatrix s;
};

/// Hand-picked valid pairs with m <= 3 and operator degree <= 3.
std::vector<DiracInstance> curated_dirac_instances();
std::vector<ConstrainedInstance> curated_constrained_instances();
std::vector<LagrangeInstance> curated_lagrange_instances();

/// Product of `steps` elementary operations with polynomial multipliers of degree <= `degree`,
/// a row permutation and a nonzero constant scaling; the determinant is a nonzero constant.
RPolyMatrix random_unimodular(Index m, std::uint64_t seed, Index degree = 1, Index steps = 3);

/// Kernel pair (W F, W E); skew-adjoint instances are first rewritten as (I, -J).
DiracInstance transformed(const DiracInstance& inst, const RPolyMatrix& w, const std::string& name);

}  // namespace bforge

#endif
