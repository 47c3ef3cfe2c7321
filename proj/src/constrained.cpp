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

#include <bforge/constrained.hpp>

#include <bforge/poly_algebra.hpp>
#include <bforge/random.hpp>

namespace bforge {

namespace {

Rational bracket(const RPoly& p, const Rational& alpha, const Rational& beta) { return p(beta) - p(alpha); }

RPoly quadratic(const RPolyMatrix& x, const RMatrix& mid, const RPolyMatrix& y) {
    if (x.rows() == 0) return RPoly();
    return (x.transpose() * mid * y).entry(0, 0);
}

}  // namespace

ConstrainedStructure constrained_boundary(const RPolyMatrix& j, const RPolyMatrix& g) {
    const Index m = j.rows();
    if (g.cols() != m) throw Error(ErrorCode::dimension_mismatch, "G must have as many columns as J");
    const Index k = g.rows();
    BoundaryStructure js = skew_adjoint_structure(j);

    ConstrainedStructure out;
    out.j = j;
    out.g = g;
    out.pi_j = std::move(js.pi);
    out.z_j = std::move(js.z);
    out.sigma_j = std::move(js.sigma);
    out.inertia_j = js.inertia;

    RTwoVar g_form = outer(RPolyMatrix::identity(m), para_conjugate(g).transpose()) - outer(g, RPolyMatrix::identity(k));
    out.pi_g_form = div_zeta_plus_eta(g_form);
    GeneralFactorization<Rational> fac = factor_general(out.pi_g_form);
    out.pi_g = identity<Rational>(fac.inner());
    out.z_g = std::move(fac.x);
    out.v_g = std::move(fac.y);
    if (!(mul_zeta_plus_eta(outer(out.z_g, out.pi_g, out.v_g)) == g_form))
        throw Error(ErrorCode::internal, "constraint factorization fails to reconstruct");
    return out;
}

ConstrainedSolution constrained_solution(const ConstrainedStructure& s, const RPolyMatrix& e, const RPolyMatrix& lambda) {
    if (e.rows() != s.efforts() || lambda.rows() != s.multipliers())
        throw Error(ErrorCode::dimension_mismatch, "effort or multiplier dimension mismatch");
    if (!apply(s.g, e).is_zero()) throw Error(ErrorCode::dimension_mismatch, "effort violates G(d/dz) e = 0");
    ConstrainedSolution out;
    out.e = e;
    out.lambda = lambda;
    out.f = apply(s.j, e) + apply(para_conjugate(s.g).transpose(), lambda);
    return out;
}

ConstrainedSolution constrained_sample(const ConstrainedStructure& s, Index degree, std::uint64_t seed) {
    RationalSource src(seed);
    const Index m = s.efforts();
    std::vector<RPolyMatrix> basis = polynomial_kernel_basis(s.g, degree);
    RPolyMatrix e(m, 1);
    for (const auto& v : basis) e += src.next() * v;
    ConstrainedSolution out = constrained_solution(s, e, src.vector(s.multipliers(), degree));
    out.kernel_empty = basis.empty();
    return out;
}

Rational constrained_form(const ConstrainedStructure& s, const ConstrainedSolution& first, const ConstrainedSolution& second,
                    const Rational& alpha, const Rational& beta) {
    const RPoly interior = dot(first.e, second.f) + dot(second.e, first.f);
    const RPolyMatrix bj1 = apply(s.z_j, first.e), bj2 = apply(s.z_j, second.e);
    const RPolyMatrix bg1 = apply(s.z_g, first.e), bg2 = apply(s.z_g, second.e);
    const RPolyMatrix cg1 = apply(s.v_g, first.lambda), cg2 = apply(s.v_g, second.lambda);
    const RPoly boundary = quadratic(bj1, s.sigma_j, bj2) + quadratic(bg1, s.pi_g, cg2) + quadratic(bg2, s.pi_g, cg1);
    return definite_integral(interior, alpha, beta) - bracket(boundary, alpha, beta);
}

}  // namespace bforge
