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

#include <bforge/dirac.hpp>
#include <bforge/harness.hpp>
#include <bforge/poly_algebra.hpp>

#include "support.hpp"

using namespace bforge;
using namespace bforge::test;

namespace {

RMatrix hyperbolic() { return mat({{0, 1}, {1, 0}}); }
RPolyMatrix wave_j() { return pmat({{0, s()}, {s(), 0}}); }

// Dirac bilinear form written out directly from its definition.
Rational dirac_form_oracle(const BoundaryStructure& st, const RPolyMatrix& l1, const RPolyMatrix& l2, const Rational& a,
                      const Rational& b) {
    RPolyMatrix f1 = apply(st.rep.n_f, l1), e1 = apply(st.rep.n_e, l1);
    RPolyMatrix f2 = apply(st.rep.n_f, l2), e2 = apply(st.rep.n_e, l2);
    RPoly integrand = dot(e1, f2) + dot(e2, f1);
    RPoly prim = antiderivative(integrand);
    RPolyMatrix b1 = apply(st.z, l1), b2 = apply(st.z, l2);
    auto form = [&](const Rational& at) {
        if (st.dimension() == 0) return Rational(0);
        return Rational((b1(at).transpose() * st.sigma * b2(at))(0, 0));
    };
    return prim(b) - prim(a) - form(b) + form(a);
}

Inertia coefficient_inertia(const RTwoVar& pi) {
    Inertia in = charpoly_inertia(to_coeff(pi).dense);
    in.zero = 0;
    return in;
}

}  // namespace

TEST_CASE("Dirac conditions on the module examples") {
    auto ex1 = check_dirac_conditions(wave_j(), RPolyMatrix::identity(2));
    CHECK(ex1.passed());

    auto drop = check_dirac_conditions(pmat({{s(), 0}, {0, 0}}), pmat({{0, 0}, {0, s()}}));
    CHECK(drop.skew_ok);
    CHECK_FALSE(drop.rank_ok);
    CHECK(drop.minors_gcd == s() * s());  // the only nonzero 2x2 minor is s * s
    try {
        validate_dirac_pair(pmat({{s(), 0}, {0, 0}}), pmat({{0, 0}, {0, s()}}));
        FAIL("expected RankConditionFailed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::rank_condition_failed);
    }

    CHECK(check_dirac_conditions(RPolyMatrix(2, 2), RPolyMatrix::identity(2)).passed());

    // F = s, E = s: F(-s)E(s) + E(-s)F(s) = -2 s^2.
    auto bad = check_dirac_conditions(pmat({{s()}}), pmat({{s()}}));
    CHECK_FALSE(bad.skew_ok);
    CHECK(bad.skew_residual == pmat({{-2 * s() * s()}}));
    try {
        validate_dirac_pair(pmat({{s()}}), pmat({{s()}}));
        FAIL("expected SkewConditionFailed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::skew_condition_failed);
    }
}

TEST_CASE("image representation examples") {
    auto ex1 = image_representation(validate_dirac_pair(wave_j(), RPolyMatrix::identity(2)));
    CHECK(ex1.n_f == RPolyMatrix::identity(2));
    CHECK(ex1.n_e == pmat({{0, -s()}, {-s(), 0}}));

    auto tr = image_representation(validate_dirac_pair(pmat({{s()}}), pmat({{1}})));
    CHECK(tr.n_f == pmat({{1}}));
    CHECK(tr.n_e == pmat({{-s()}}));

    auto dg = image_representation(validate_dirac_pair(RPolyMatrix(2, 2), RPolyMatrix::identity(2)));
    CHECK(dg.n_f == RPolyMatrix::identity(2));
    CHECK(dg.n_e.is_zero());
}

TEST_CASE("boundary structure examples") {
    auto ex1 = boundary_structure(validate_dirac_pair(wave_j(), RPolyMatrix::identity(2)));
    CHECK(ex1.pi == RTwoVar::constant(RMatrix(-hyperbolic())));
    CHECK(ex1.z == RPolyMatrix::identity(2));
    CHECK(exactly_equal(ex1.sigma, RMatrix(-hyperbolic())));
    CHECK(ex1.inertia == Inertia{1, 1, 0});

    auto dg = boundary_structure(validate_dirac_pair(RPolyMatrix(2, 2), RPolyMatrix::identity(2)));
    CHECK(dg.pairing.is_zero());
    CHECK(dg.dimension() == 0);

    auto tr = boundary_structure(validate_dirac_pair(pmat({{s()}}), pmat({{1}})));
    CHECK(tr.pairing == outer(pmat({{-s()}}), pmat({{1}})) + outer(pmat({{1}}), pmat({{-s()}})));  // -zeta - eta
    CHECK(tr.pi == RTwoVar::constant(mat({{-1}})));
    CHECK(tr.z == pmat({{1}}));
    CHECK(exactly_equal(tr.sigma, mat({{-1}})));
    CHECK(tr.inertia == Inertia{0, 1, 0});
}

TEST_CASE("skew-adjoint entry reproduces the worked example") {
    auto st = skew_adjoint_structure(wave_j());
    CHECK(st.pi == RTwoVar::constant(hyperbolic()));
    CHECK(st.z == RPolyMatrix::identity(2));
    CHECK(exactly_equal(st.sigma, hyperbolic()));
    CHECK(st.entry == EntryPoint::skew_adjoint);

    CHECK(check_skew_adjoint(pmat({{s()}})).passed());
    auto bad = check_skew_adjoint(pmat({{s() * s()}}));
    CHECK_FALSE(bad.passed());
    CHECK(bad.residual == pmat({{2 * s() * s()}}));
    CHECK_THROWS_AS(skew_adjoint_structure(pmat({{s() * s()}})), Error);
}

TEST_CASE("canonical power split examples") {
    auto a = canonical_power_split(hyperbolic());
    CHECK(a.p == 1);
    CHECK(a.t.isApprox(Matrix<double>::Identity(2, 2)));
    CHECK(a.residual == 0.0);

    auto b = canonical_power_split(mat({{1, 0}, {0, -1}}));
    CHECK(b.p == 1);
    CHECK(b.residual < 1e-12);
    Matrix<double> back = b.t.transpose() * hyperbolic_form<double>(1) * b.t;
    CHECK(std::abs(back(0, 0) - 1.0) < 1e-12);
    CHECK(std::abs(back(1, 1) + 1.0) < 1e-12);

    try {
        canonical_power_split(mat({{1}}));
        FAIL("expected UnbalancedSignature");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::unbalanced_signature);
        CHECK(std::string(e.what()).find("(1, 0, 0)") != std::string::npos);
    }
    CHECK_THROWS_AS(canonical_power_split(mat({{1, 0}, {0, 0}})), Error);
}

TEST_CASE("split of random balanced signatures") {
    Gen g(71);
    for (int t = 0; t < 40; ++t) {
        const Index p = g.integer(1, 3);
        RMatrix d = RMatrix::Zero(2 * p, 2 * p);
        for (Index i = 0; i < p; ++i) {
            d(i, i) = Rational(g.integer(1, 9), g.integer(1, 9));
            d(p + i, p + i) = -Rational(g.integer(1, 9), g.integer(1, 9));
        }
        RMatrix r = g.invertible(2 * p);
        RMatrix sigma = r.transpose() * d * r;
        auto split = canonical_power_split(sigma);
        CHECK(split.p == p);
        CHECK(split.within_tolerance());
        Matrix<double> back = split.t.transpose() * hyperbolic_form<double>(p) * split.t;
        CHECK((back - to_double(sigma)).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("two-point form") {
    auto tr = boundary_structure(validate_dirac_pair(pmat({{s()}}), pmat({{1}})));
    auto a = two_point_form(tr);
    CHECK(exactly_equal(a.sigma, mat({{-1, 0}, {0, 1}})));
    CHECK(a.split.p == 1);
    CHECK(a.split.within_tolerance());

    auto b = two_point_form(skew_adjoint_structure(wave_j()));
    CHECK(b.sigma.rows() == 4);
    CHECK(charpoly_inertia(b.sigma) == Inertia{2, 2, 0});
    CHECK(b.split.p == 2);

    auto c = two_point_form(boundary_structure(validate_dirac_pair(RPolyMatrix(1, 1), pmat({{1}}))));
    CHECK(c.sigma.rows() == 0);
    CHECK(c.split.p == 0);
}

TEST_CASE("concatenation compatibility") {
    auto st = skew_adjoint_structure(wave_j());
    const RPoly z = s();
    Trajectory left{pvec({z, z}), 0, 1};
    Trajectory right{pvec({1 + (z - 1) * (z - 1), 1 + 7 * (z - 1)}), 1, 2};
    CHECK(concatenation_compatible(st, left, right));
    Trajectory other{pvec({2 * z, z}), 1, 2};
    CHECK_FALSE(concatenation_compatible(st, left, other));
    Trajectory gap{pvec({z, z}), 2, 3};
    CHECK_THROWS_AS(concatenation_compatible(st, left, gap), Error);

    auto empty = boundary_structure(validate_dirac_pair(RPolyMatrix(1, 1), pmat({{1}})));
    CHECK(concatenation_compatible(empty, Trajectory{pvec({z}), 0, 1}, Trajectory{pvec({5 * z}), 1, 2}));
}

TEST_CASE("Dirac bilinear form vanishes on curated instances") {
    Gen g(73);
    for (const auto& inst : curated_dirac_instances()) {
        CAPTURE(inst.name);
        auto st = build_structure(inst);
        const Index m = st.latent_dim();
        for (int t = 0; t < 10; ++t) {
            RPolyMatrix l1 = g.polyvec(m, g.integer(0, 6)), l2 = g.polyvec(m, g.integer(0, 6));
            Rational a = g.small(), b = a + g.nonzero() * g.nonzero();
            CHECK(dirac_form_oracle(st, l1, l2, a, b) == 0);
        }
    }
}

TEST_CASE("boundary factorization reconstructs and carries the coefficient signature") {
    for (const auto& inst : curated_dirac_instances()) {
        CAPTURE(inst.name);
        auto st = build_structure(inst);
        CHECK(mul_zeta_plus_eta(outer(st.z, st.sigma, st.z)) == st.pairing);
        CHECK(st.pi.is_symmetric());
        CHECK(st.dimension() == brute_rank(to_coeff(st.pi).dense));
        CHECK(st.inertia == coefficient_inertia(st.pi));
        CHECK(charpoly_inertia(st.sigma) == st.inertia);
    }
}

TEST_CASE("unimodular transforms keep dimension and inertia") {
    for (const auto& inst : curated_dirac_instances()) {
        CAPTURE(inst.name);
        auto base = build_structure(inst);
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            RPolyMatrix w = random_unimodular(base.ports(), seed);
            CHECK(determinant(w).degree() == Index(0));
            auto moved = build_structure(transformed(inst, w, inst.name + "_w"));
            CHECK(moved.dimension() == base.dimension());
            CHECK(moved.inertia == base.inertia);
        }
    }
}

TEST_CASE("degenerate pair has no boundary") {
    auto st = boundary_structure(validate_dirac_pair(RPolyMatrix(2, 2), RPolyMatrix::identity(2)));
    Gen g(79);
    RPolyMatrix l1 = g.polyvec(2, 3), l2 = g.polyvec(2, 4);
    CHECK(apply(st.rep.n_e, l1).is_zero());
    CHECK(dirac_form_oracle(st, l1, l2, 0, 1) == 0);
}
