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

#include <bforge/harness.hpp>
#include <bforge/realize.hpp>

#include "support.hpp"

using namespace bforge;
using namespace bforge::test;

namespace {

RMatrix hyperbolic() { return mat({{0, 1}, {1, 0}}); }

BoundaryStructure transport() { return boundary_structure(validate_dirac_pair(pmat({{s()}}), pmat({{1}}))); }

}  // namespace

TEST_CASE("worked example realization") {
    auto st = skew_adjoint_structure(pmat({{0, s()}, {s(), 0}}));
    auto out = realize(st);
    REQUIRE(out.ok());
    const Realization& r = *out.realization;
    CHECK(is_exactly_zero(r.a));
    CHECK(exactly_equal(r.b, hyperbolic()));
    CHECK(exactly_equal(r.c, identity<Rational>(2)));
    CHECK(is_exactly_zero(r.d));
    CHECK(exactly_equal(RMatrix(r.b.transpose() * r.sigma), r.c));
    CHECK(verify_realization_structure(r).passed());
}

TEST_CASE("non-proper scalar instance needs a swap") {
    auto st = transport();
    auto direct = realize(st);
    CHECK(direct.status == RealizeStatus::unsolvable);
    CHECK_FALSE(direct.witness.empty());

    auto swapped = realize(st, {1});
    REQUIRE(swapped.ok());
    const Realization& r = *swapped.realization;
    CHECK(exactly_equal(r.a, mat({{0}})));
    CHECK(exactly_equal(r.b, mat({{-1}})));
    CHECK(exactly_equal(r.c, mat({{1}})));
    CHECK(exactly_equal(r.d, mat({{0}})));
    CHECK(exactly_equal(r.sigma, mat({{-1}})));
    CHECK(verify_realization_structure(r).passed());

    CHECK_THROWS_AS(realize(st, {2}), Error);
    CHECK_THROWS_AS(realize(st, {1, 1}), Error);
}

TEST_CASE("partition search examples") {
    auto ex1 = partition_search(skew_adjoint_structure(pmat({{0, s()}, {s(), 0}})));
    REQUIRE(ex1.found());
    CHECK(ex1.swap->empty());

    auto tr = partition_search(transport());
    REQUIRE(tr.found());
    CHECK(*tr.swap == std::vector<Index>{1});
    CHECK(tr.witnesses.size() == 1);

    auto dg = partition_search(boundary_structure(validate_dirac_pair(RPolyMatrix(2, 2), RPolyMatrix::identity(2))));
    REQUIRE(dg.found());
    CHECK(dg.swap->empty());
    CHECK(dg.outcome.realization->a.rows() == 0);
    CHECK(verify_realization_structure(*dg.outcome.realization).passed());

    // Flow equals the latent here, so the direct problem is degenerate and both ports swap.
    auto kernel = partition_search(boundary_structure(validate_dirac_pair(pmat({{0, s()}, {s(), 0}}), RPolyMatrix::identity(2))));
    REQUIRE(kernel.found());
    CHECK(*kernel.swap == std::vector<Index>{1, 2});
}

TEST_CASE("structure check flags a tampered realization") {
    auto r = *realize(skew_adjoint_structure(pmat({{0, s()}, {s(), 0}}))).realization;
    r.d = mat({{0, 1}, {0, 0}});
    auto res = verify_realization_structure(r);
    CHECK_FALSE(res.passed());
    CHECK(exactly_equal(res.feedthrough, mat({{0, 1}, {1, 0}})));
    CHECK(is_exactly_zero(res.lyapunov));
}

TEST_CASE("swap candidates are ordered by size then lexicographically") {
    auto c = swap_candidates(3);
    REQUIRE(c.size() == 8);
    CHECK(c[0].empty());
    CHECK(c[1] == std::vector<Index>{1});
    CHECK(c[3] == std::vector<Index>{3});
    CHECK(c[4] == std::vector<Index>{1, 2});
    CHECK(c[5] == std::vector<Index>{1, 3});
    CHECK(c[6] == std::vector<Index>{2, 3});
    CHECK(c[7] == std::vector<Index>{1, 2, 3});
}

TEST_CASE("curated Dirac instances realize losslessly and consistently") {
    SuiteConfig cfg;
    cfg.trials = 50;
    cfg.degrees = {0, 1, 2, 3, 4, 5, 6};
    for (const auto& inst : curated_dirac_instances()) {
        CAPTURE(inst.name);
        auto st = build_structure(inst);
        auto found = partition_search(st);
        REQUIRE(found.found());
        const Realization& r = *found.outcome.realization;
        CHECK(verify_realization_structure(r).passed());
        CHECK(r.a.rows() == brute_rank(to_coeff(st.pi).dense));
        CHECK(realization_suite(st, r, cfg, inst.name).passed());
    }
}

TEST_CASE("Lagrange realizations are input-output Hamiltonian") {
    auto str = lagrange_boundary(validate_lagrange_pair(pmat({{1}}), pmat({{s() * s()}})));
    auto out = realize(str);
    REQUIRE(out.ok());
    const Realization& r = *out.realization;
    CHECK(exactly_equal(r.a, mat({{0, 1}, {0, 0}})));
    CHECK(exactly_equal(r.b, mat({{0}, {1}})));
    CHECK(exactly_equal(r.c, mat({{-1, 0}})));
    CHECK(is_exactly_zero(r.d));

    SuiteConfig cfg;
    cfg.trials = 50;
    for (const auto& inst : curated_lagrange_instances()) {
        CAPTURE(inst.name);
        auto b = lagrange_boundary(validate_lagrange_pair(inst.p, inst.s));
        auto found = partition_search(b);
        REQUIRE(found.found());
        CHECK(verify_realization_structure(*found.outcome.realization).passed());
        CHECK(realization_suite(b, *found.outcome.realization, cfg, inst.name).passed());
    }
}
