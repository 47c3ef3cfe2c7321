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

// Acceptance run: one line per criterion, exit status 1 if any criterion fails.

#include <bforge/harness.hpp>
#include <bforge/poly_algebra.hpp>
#include <bforge/random.hpp>

#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace bforge;
using namespace bforge::test;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (ok || !passed) {
            passed = passed && ok;
            return;
        }
        passed = false;
        detail = what;
    }
};

int failures = 0;

void report(int number, const std::string& title, Criterion c, const std::string& summary) {
    if (!c.passed) ++failures;
    std::printf("[%s] AC%d %s: %s\n", c.passed ? "PASS" : "FAIL", number, title.c_str(),
                c.passed ? summary.c_str() : c.detail.c_str());
}

std::string secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f s", s);
    return buf;
}

Index operator_degree(const DiracInstance& inst) {
    if (inst.j) return inst.j->degree().value_or(0);
    return std::max(inst.f.degree().value_or(0), inst.e.degree().value_or(0));
}

Index ports(const DiracInstance& inst) { return inst.j ? inst.j->rows() : inst.f.rows(); }

// Curated instances plus unimodular transforms that keep m <= 3 and operator degree <= 3.
std::vector<DiracInstance> signature_instances() {
    std::vector<DiracInstance> out;
    for (const auto& inst : curated_dirac_instances()) {
        if (ports(inst) > 3 || operator_degree(inst) > 3) continue;
        out.push_back(inst);
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            DiracInstance t = transformed(inst, random_unimodular(ports(inst), seed * 101), inst.name + "_w" + std::to_string(seed));
            if (operator_degree(t) <= 3) out.push_back(std::move(t));
        }
    }
    return out;
}

void ac1() {
    Criterion c;
    const RPolyMatrix j = pmat({{0, s()}, {s(), 0}});
    const auto start = Clock::now();
    const BoundaryStructure st = skew_adjoint_structure(j);
    const double elapsed = seconds_since(start);
    const RMatrix h = mat({{0, 1}, {1, 0}});
    RTwoVar pi(2, 2);
    pi.add(0, 0, h);
    c.require(st.pi == pi, "Pi differs from [[0,1],[1,0]]");
    c.require(st.z == pmat({{1, 0}, {0, 1}}), "Z differs from I");
    c.require(exactly_equal(st.sigma, h), "Sigma differs from [[0,1],[1,0]]");
    c.require(elapsed < 0.1, "took " + secs(elapsed) + ", limit 0.1 s");
    report(1, "Wave example reproduction", c, "Pi = Sigma = [[0,1],[1,0]], Z = I exactly in " + secs(elapsed) + " (limit 0.1 s)");
}

void ac2() {
    Criterion c;
    const auto instances = signature_instances();
    const auto start = Clock::now();
    for (const auto& inst : instances) {
        const BoundaryStructure st = build_structure(inst);
        const Inertia of_coeff = charpoly_inertia(to_coeff(st.pi).dense);
        const Inertia of_sigma = charpoly_inertia(st.sigma);
        c.require(of_sigma.positive == of_coeff.positive && of_sigma.negative == of_coeff.negative,
                  inst.name + ": inertia(Sigma) = " + to_string(of_sigma) + ", inertia(Pi~) = " + to_string(of_coeff));
        c.require(st.inertia.positive == of_sigma.positive && st.inertia.negative == of_sigma.negative,
                  inst.name + ": reported inertia " + to_string(st.inertia) + " disagrees with " + to_string(of_sigma));
        c.require(st.dimension() == brute_rank(to_coeff(st.pi).dense),
                  inst.name + ": boundary dimension differs from rank of the coefficient matrix");
    }
    const double elapsed = seconds_since(start);
    c.require(instances.size() >= 20, "only " + std::to_string(instances.size()) + " instances");
    c.require(elapsed < 5.0, "took " + secs(elapsed) + ", limit 5 s");
    report(2, "Signature invariance", c,
           std::to_string(instances.size()) + " instances, inertia(Sigma) = inertia(Pi~) exactly in " + secs(elapsed) +
               " (limit 5 s)");
}

void ac3() {
    Criterion c;
    SuiteConfig cfg;  // 100 trials, degrees {0, 2, 6}, random rational intervals
    const auto instances = curated_dirac_instances();
    Index trials = 0;
    const auto start = Clock::now();
    for (const auto& inst : instances) {
        const BoundaryStructure st = build_structure(inst);
        for (const VerificationReport& r : {dirac_suite(st, cfg, inst.name), power_balance_suite(st, cfg, std::nullopt, inst.name)}) {
            c.require(r.passed() && r.trials == 100, inst.name + ": " + r.check + " has " + std::to_string(r.failures()) +
                                                          " nonzero residuals");
            trials += r.trials;
        }
    }
    const double elapsed = seconds_since(start);
    c.require(elapsed < 10.0, "took " + secs(elapsed) + ", limit 10 s");
    report(3, "Dirac form and power balance", c,
           std::to_string(instances.size()) + " instances, " + std::to_string(trials) +
               " trials (degrees <= 6), all residuals exactly 0 in " + secs(elapsed) + " (limit 10 s)");
}

void ac4() {
    Criterion c;
    SuiteConfig cfg;
    Index trials = 0;
    bool scalar_constraint = false, string = false;
    const auto start = Clock::now();
    for (const auto& inst : curated_constrained_instances()) {
        scalar_constraint = scalar_constraint || (inst.j == pmat({{s()}}) && inst.g == pmat({{s()}}));
        const VerificationReport r = constrained_suite(constrained_boundary(inst.j, inst.g), cfg, inst.name);
        c.require(r.passed() && r.trials == 100, inst.name + ": " + std::to_string(r.failures()) + " nonzero residuals");
        trials += r.trials;
    }
    for (const auto& inst : curated_lagrange_instances()) {
        string = string || (inst.p == pmat({{1}}) && inst.s == pmat({{s() * s()}}));
        const VerificationReport r = lagrange_suite(lagrange_boundary(validate_lagrange_pair(inst.p, inst.s)), cfg, inst.name);
        c.require(r.passed() && r.trials == 100, inst.name + ": " + std::to_string(r.failures()) + " nonzero residuals");
        trials += r.trials;
    }
    const double elapsed = seconds_since(start);
    c.require(scalar_constraint, "J = [s], G = [s] is not among the constrained instances");
    c.require(string, "P = 1, S = s^2 is not among the Lagrange instances");
    c.require(elapsed < 10.0, "took " + secs(elapsed) + ", limit 10 s");
    report(4, "Constrained and Lagrangian forms", c,
           std::to_string(trials) + " samples, all residuals exactly 0 in " + secs(elapsed) + " (limit 10 s)");
}

void ac5() {
    Criterion c;
    SuiteConfig cfg;
    cfg.trials = 50;
    const BoundaryStructure ex1 = skew_adjoint_structure(pmat({{0, s()}, {s(), 0}}));
    const RealizeOutcome r = realize(ex1);
    c.require(r.ok(), "Wave example has no realization: " + r.witness);
    if (r.ok()) {
        const Realization& x = *r.realization;
        c.require(exactly_equal(x.a, RMatrix::Zero(2, 2)) && exactly_equal(x.b, mat({{0, 1}, {1, 0}})) &&
                      exactly_equal(x.c, mat({{1, 0}, {0, 1}})) && exactly_equal(x.d, RMatrix::Zero(2, 2)),
                  "Wave example realization differs from (0, [[0,1],[1,0]], I, 0)");
        const RMatrix at_s = x.a.transpose() * x.sigma + x.sigma * x.a;
        c.require(exactly_equal(at_s, RMatrix::Zero(2, 2)), "A^T Sigma + Sigma A != 0");
        c.require(exactly_equal(RMatrix(x.b.transpose() * x.sigma), x.c), "B^T Sigma != C");
        c.require(exactly_equal(x.d, RMatrix(-x.d.transpose())), "D != -D^T");
        const VerificationReport v = realization_suite(ex1, x, cfg, "wave");
        c.require(v.passed() && v.trials == 50, "Wave example trajectory consistency failed");
    }
    const DiracPair transport_pair = validate_dirac_pair(pmat({{s()}}), pmat({{1}}));
    const BoundaryStructure transport = boundary_structure(transport_pair);
    c.require(realize(transport).status == RealizeStatus::unsolvable, "F = s, E = 1 is solvable without a swap");
    const RealizeOutcome swapped = realize(transport, {1});
    c.require(swapped.ok(), "F = s, E = 1 is unsolvable with swap {1}");
    if (swapped.ok()) {
        c.require(verify_realization_structure(*swapped.realization).passed(), "swapped transport is not lossless");
        const VerificationReport v = realization_suite(transport, *swapped.realization, cfg, "transport");
        c.require(v.passed() && v.trials == 50, "transport trajectory consistency failed");
    }
    report(5, "Realization", c,
           "Wave example gives (0, [[0,1],[1,0]], I, 0) with the structure identities exact; F = s, E = 1 is Unsolvable "
           "without swap and solved with {1}; 50 + 50 trajectories consistent");
}

void ac6() {
    Criterion c;
    Index balanced = 0, doubled = 0;
    double worst = 0.0;
    for (const auto& inst : signature_instances()) {
        const BoundaryStructure st = build_structure(inst);
        const Inertia in = charpoly_inertia(st.sigma);
        if (in.positive == in.negative && in.zero == 0) {
            const PowerSplit sp = canonical_power_split(st.sigma);
            c.require(sp.residual < 1e-9, inst.name + ": split residual " + std::to_string(sp.residual));
            worst = std::max(worst, sp.residual);
            ++balanced;
        }
        const TwoPointForm tp = two_point_form(st);
        c.require(tp.split.residual < 1e-9 && tp.split.p == st.dimension(), inst.name + ": two-point form did not split");
        worst = std::max(worst, tp.split.residual);
        ++doubled;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", worst);
    report(6, "Canonical split", c,
           std::to_string(balanced) + " balanced forms and " + std::to_string(doubled) +
               " two-point forms split, worst residual " + buf + " (limit 1e-9)");
}

void ac7() {
    Criterion c;
    Gen g(2024);
    for (int t = 0; t < 100; ++t) {
        const Index p = g.integer(1, 3), q2 = g.integer(1, 3);
        const RTwoVar phi = g.twovar(p, q2, 3);
        const RPolyMatrix v = g.polyvec(p, g.integer(0, 6)), w = g.polyvec(q2, g.integer(0, 6));
        const VerificationReport r = derivative_rule_check(phi, v, w);
        c.require(r.passed(), "derivative rule fails on trial " + std::to_string(t));
    }
    for (int t = 0; t < 100; ++t) {
        const RTwoVar phi = g.twovar(g.integer(1, 3), g.integer(1, 3), 4);
        c.require(div_zeta_plus_eta(mul_zeta_plus_eta(phi)) == phi, "div(mul(Phi)) != Phi on trial " + std::to_string(t));
    }
    report(7, "Derivative rule and division", c, "100 derivative-rule trials and 100 div(mul(Phi)) = Phi, all exact");
}

void ac8() {
    Criterion c;
    Index checked = 0;
    for (const auto& inst : curated_dirac_instances()) {
        const BoundaryStructure base = build_structure(inst);
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const DiracInstance t = transformed(inst, random_unimodular(ports(inst), seed), inst.name);
            const BoundaryStructure st = build_structure(t);
            c.require(st.dimension() == base.dimension(), inst.name + ": n changed under seed " + std::to_string(seed));
            const Inertia a = charpoly_inertia(st.sigma), b = charpoly_inertia(base.sigma);
            c.require(a.positive == b.positive && a.negative == b.negative,
                      inst.name + ": inertia changed under seed " + std::to_string(seed));
            ++checked;
        }
    }
    report(8, "Unimodular invariance", c,
           std::to_string(checked) + " transforms (20 per instance), n and inertia unchanged");
}

}  // namespace

int main() {
    const std::vector<std::function<void()>> criteria{ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8};
    for (const auto& run : criteria) {
        try {
            run();
        } catch (const std::exception& e) {
            ++failures;
            std::printf("[FAIL] criterion raised: %s\n", e.what());
        }
    }
    return failures == 0 ? 0 : 1;
}
