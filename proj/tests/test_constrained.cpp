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

#include <doctest.h>

#include <bforge/constrained.hpp>
#include <bforge/harness.hpp>

#include "support.hpp"

using namespace bforge;
using namespace bforge::test;

namespace {

RMatrix hyperbolic() { return mat({{0, 1}, {1, 0}}); }

RTwoVar g_form(const RPolyMatrix& g) {
    const Index m = g.cols(), k = g.rows();
    RTwoVar out(m, k);
    // G^T(-eta) - G^T(zeta), coefficient by coefficient.
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < k; ++j) {
            RPoly entry = g.entry(j, i);
            for (Index p = 0; p < entry.size(); ++p) {
                RMatrix unit = RMatrix::Zero(m, k);
                unit(i, j) = entry.coeff(p);
                out.add(0, p, (p % 2 ? -1 : 1) * unit);
                out.add(p, 0, -unit);
            }
        }
    return out;
}

}  // namespace

TEST_CASE("constrained boundary examples") {
    auto a = constrained_boundary(pmat({{s()}}), pmat({{s()}}));
    CHECK(a.pi_j == RTwoVar::constant(mat({{1}})));
    CHECK(a.z_j == pmat({{1}}));
    CHECK(exactly_equal(a.sigma_j, mat({{1}})));
    CHECK(a.pi_g_form == RTwoVar::constant(mat({{-1}})));
    CHECK(outer(a.z_g, a.pi_g, a.v_g) == RTwoVar::constant(mat({{-1}})));
    CHECK(a.z_g.rows() == 1);

    auto b = constrained_boundary(pmat({{0, s()}, {s(), 0}}), RPolyMatrix(1, 2));
    CHECK(exactly_equal(b.sigma_j, hyperbolic()));
    CHECK(b.z_j == RPolyMatrix::identity(2));
    CHECK(b.z_g.rows() == 0);

    auto c = constrained_boundary(pmat({{0}}), pmat({{s() * s()}}));
    CHECK(c.z_j.rows() == 0);
    // eta^2 - zeta^2 = (zeta + eta)(eta - zeta)
    RTwoVar eta_minus_zeta(1, 1);
    eta_minus_zeta.add(0, 1, mat({{1}}));
    eta_minus_zeta.add(1, 0, mat({{-1}}));
    CHECK(c.pi_g_form == eta_minus_zeta);
    CHECK(c.z_g.rows() == 2);

    CHECK_THROWS_AS(constrained_boundary(pmat({{s() * s()}}), pmat({{s()}})), Error);
    CHECK_THROWS_AS(constrained_boundary(pmat({{s()}}), pmat({{s(), 1}})), Error);
}

TEST_CASE("constrained reconstruction identities") {
    for (const auto& inst : curated_constrained_instances()) {
        CAPTURE(inst.name);
        auto st = constrained_boundary(inst.j, inst.g);
        RTwoVar j_form = outer(inst.j, RPolyMatrix::identity(inst.j.rows())) + outer(RPolyMatrix::identity(inst.j.rows()), inst.j);
        CHECK(mul_zeta_plus_eta(outer(st.z_j, st.sigma_j, st.z_j)) == j_form);
        CHECK(mul_zeta_plus_eta(outer(st.z_g, st.pi_g, st.v_g)) == g_form(inst.g));
        CHECK(st.z_g.rows() == brute_rank(to_coeff(st.pi_g_form).dense));
    }
}

TEST_CASE("J-part with no constraint matches the skew-adjoint entry") {
    for (const auto& inst : curated_dirac_instances()) {
        if (!inst.j) continue;
        CAPTURE(inst.name);
        auto d = skew_adjoint_structure(*inst.j);
        auto c = constrained_boundary(*inst.j, RPolyMatrix(0, inst.j->rows()));
        CHECK(c.pi_j == d.pi);
        CHECK(c.inertia_j == d.inertia);
    }
}

TEST_CASE("constrained sampling") {
    auto a = constrained_boundary(pmat({{s()}}), pmat({{s()}}));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto sol = constrained_sample(a, 2, seed);
        CHECK(sol.e.degree().value_or(0) == 0);
        CHECK(sol.f == -derivative(sol.lambda));
        CHECK(sol.lambda.degree().value_or(0) <= 2);
    }

    auto b = constrained_boundary(pmat({{s()}}), pmat({{1}}));
    auto sb = constrained_sample(b, 3, 7);
    CHECK(sb.kernel_empty);
    CHECK(sb.e.is_zero());
    CHECK(sb.f == sb.lambda);

    auto c = constrained_boundary(pmat({{s()}}), RPolyMatrix(0, 1));
    auto sc = constrained_sample(c, 3, 7);
    CHECK_FALSE(sc.kernel_empty);
    CHECK_FALSE(sc.e.is_zero());
    CHECK(sc.lambda.rows() == 0);
    CHECK(sc.f == derivative(sc.e));

    CHECK(constrained_sample(a, 4, 99).lambda == constrained_sample(a, 4, 99).lambda);
    CHECK_THROWS_AS(constrained_solution(a, pvec({s()}), pvec({1})), Error);
}

TEST_CASE("Constrained form examples") {
    auto st = constrained_boundary(pmat({{s()}}), pmat({{s()}}));
    Gen g(83);
    for (int t = 0; t < 20; ++t) {
        Rational c1 = g.small(), c2 = g.small();
        RPoly l1 = g.poly(g.integer(0, 5)), l2 = g.poly(g.integer(0, 5));
        auto s1 = constrained_solution(st, pvec({c1}), pvec({l1}));
        auto s2 = constrained_solution(st, pvec({c2}), pvec({l2}));
        Rational a = g.small(), b = a + 1 + g.integer(0, 4);
        // Interior: -c1 [l2]_a^b - c2 [l1]_a^b.
        Rational interior = -c1 * (l2(b) - l2(a)) - c2 * (l1(b) - l1(a));
        CHECK(definite_integral(dot(s1.e, s2.f) + dot(s2.e, s1.f), a, b) == interior);
        CHECK(constrained_form(st, s1, s2, a, b) == 0);
        auto zero = constrained_solution(st, pvec({0}), pvec({0}));
        CHECK(constrained_form(st, s1, zero, a, b) == 0);
    }

    auto ex1 = constrained_boundary(pmat({{0, s()}, {s(), 0}}), RPolyMatrix(1, 2));
    auto d = skew_adjoint_structure(pmat({{0, s()}, {s(), 0}}));
    RPolyMatrix e1 = g.polyvec(2, 4), e2 = g.polyvec(2, 3);
    auto s1 = constrained_solution(ex1, e1, RPolyMatrix(1, 1));
    auto s2 = constrained_solution(ex1, e2, RPolyMatrix(1, 1));
    CHECK(constrained_form(ex1, s1, s2, 0, 2) == 0);
    CHECK(constrained_form(ex1, s1, s2, 0, 2) == dirac_form_residual(d, e1, e2, 0, 2));
}

TEST_CASE("Constrained form vanishes on sampled solutions") {
    SuiteConfig cfg;
    cfg.trials = 30;
    cfg.degrees = {0, 1, 2, 3, 4, 5, 6};
    for (const auto& inst : curated_constrained_instances()) {
        CAPTURE(inst.name);
        auto rep = constrained_suite(constrained_boundary(inst.j, inst.g), cfg, inst.name);
        CHECK(rep.passed());
        CHECK(rep.failures() == 0);
    }
}
