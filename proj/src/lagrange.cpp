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

#include <bforge/lagrange.hpp>

#include <bforge/poly_algebra.hpp>

#include <sstream>

namespace bforge {

LagrangeConditions check_lagrange_conditions(const RPolyMatrix& p, const RPolyMatrix& s) {
    if (p.rows() != p.cols() || s.rows() != s.cols() || p.rows() != s.rows())
        throw Error(ErrorCode::dimension_mismatch, "P and S must be square of equal size");
    LagrangeConditions out;
    out.symmetry_residual = para_conjugate(p).transpose() * s - para_conjugate(s).transpose() * p;
    out.symmetry_ok = out.symmetry_residual.is_zero();
    out.minors_gcd = minors_gcd(hstack(p.transpose(), s.transpose()));
    out.rank_ok = out.minors_gcd.degree() == Index(0);
    return out;
}

LagrangePair validate_lagrange_pair(const RPolyMatrix& p, const RPolyMatrix& s) {
    LagrangeConditions c = check_lagrange_conditions(p, s);
    if (!c.symmetry_ok) {
        std::ostringstream os;
        os << "P^T(-s)S(s) - S^T(-s)P(s) = " << c.symmetry_residual << " is not zero";
        throw Error(ErrorCode::symmetry_condition_failed, os.str());
    }
    if (!c.rank_ok)
        throw Error(ErrorCode::rank_condition_failed,
                    "gcd of the maximal minors of [P; S] is " + to_string(c.minors_gcd) + ", not a nonzero constant");
    return LagrangePair(p, s);
}

LagrangeBoundary lagrange_boundary(const LagrangePair& pair) {
    LagrangeRep rep{para_conjugate(pair.s()), -para_conjugate(pair.p())};
    if (!(pair.p().transpose() * rep.n_x + pair.s().transpose() * rep.n_e).is_zero())
        throw Error(ErrorCode::internal, "image representation does not annihilate [P^T S^T]");
    RTwoVar pairing = outer(rep.n_x, rep.n_e) - outer(rep.n_e, rep.n_x);
    RTwoVar theta = div_zeta_plus_eta(pairing);
    SkewFactorization<Rational> fac = factor_skew(theta);
    if (!(mul_zeta_plus_eta(outer(fac.w, symplectic_unit<Rational>(fac.p), fac.w)) == pairing))
        throw Error(ErrorCode::internal, "skew factorization fails to reconstruct the pairing form");
    return LagrangeBoundary{pair, std::move(rep), std::move(pairing), std::move(theta), std::move(fac.w), fac.p};
}

StateEffort state_effort(const LagrangeRep& rep, const RPolyMatrix& latent) {
    return {apply(rep.n_x, latent), apply(rep.n_e, latent)};
}

Rational lagrange_form(const LagrangeBoundary& b, const RPolyMatrix& l1, const RPolyMatrix& l2, const Rational& alpha,
                    const Rational& beta) {
    const StateEffort s1 = state_effort(b.rep, l1), s2 = state_effort(b.rep, l2);
    const RPoly interior = dot(s1.e, s2.x) - dot(s2.e, s1.x);
    RPoly boundary;
    if (b.p > 0) {
        const RPolyMatrix w1 = apply(b.w, l1), w2 = apply(b.w, l2);
        boundary = (w1.transpose() * symplectic_unit<Rational>(b.p) * w2).entry(0, 0);
    }
    return definite_integral(interior, alpha, beta) + boundary(beta) - boundary(alpha);
}

}  // namespace bforge
