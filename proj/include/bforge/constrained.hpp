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

// Skew-adjoint J(d/dz) with effort constraints G(d/dz) e = 0 enforced by Lagrange
// multipliers: f = J(d/dz) e + G^T(-d/dz) lambda.

#ifndef BFORGE_CONSTRAINED_HPP
#define BFORGE_CONSTRAINED_HPP

#include <bforge/dirac.hpp>

#include <cstdint>

namespace bforge {

/*
   Two boundary families. With b_J = Z_J e, b_G = Z_G e, c_G = V_G lambda:
     (zeta + eta) Z_J^T(zeta) Sigma_J Z_J(eta) = J^T(zeta) + J(eta)
     (zeta + eta) Z_G^T(zeta) Pi_G V_G(eta)   = G^T(-eta) - G^T(zeta)
   and Pi_G is the identity of the minimal inner dimension.
*/
struct ConstrainedStructure {
    RPolyMatrix j;  // m x m
    RPolyMatrix g;  // k x m, k = number of multipliers (may be 0)
    RTwoVar pi_j;
    RPolyMatrix z_j;
    RMatrix sigma_j;
    Inertia inertia_j;
    RTwoVar pi_g_form;  // the quotient (G^T(-eta) - G^T(zeta)) / (zeta + eta), m x k
    RPolyMatrix z_g;
    RMatrix pi_g;
    RPolyMatrix v_g;

    Index efforts() const noexcept { return j.rows(); }
    Index multipliers() const noexcept { return g.rows(); }
};

/// Throws NotSkewAdjoint, or DimensionMismatch when G does not have m columns.
ConstrainedStructure constrained_boundary(const RPolyMatrix& j, const RPolyMatrix& g);

struct ConstrainedSolution {
    RPolyMatrix e;
    RPolyMatrix lambda;
    RPolyMatrix f;
    bool kernel_empty = false;  // no nonzero constrained e at the sampled degree; e = 0
};

/// f assembled from e and lambda. Throws DimensionMismatch if G(d/dz) e != 0.
ConstrainedSolution constrained_solution(const ConstrainedStructure& s, const RPolyMatrix& e, const RPolyMatrix& lambda);

/// e from the polynomial kernel of G up to degree d, lambda of degree <= d; deterministic in seed.
ConstrainedSolution constrained_sample(const ConstrainedStructure& s, Index degree, std::uint64_t seed);

/// Interior integral of e1^T f2 + e2^T f1 minus the b_J and symmetrized b_G / c_G boundary terms.
Rational constrained_form(const ConstrainedStructure& s, const ConstrainedSolution& first, const ConstrainedSolution& second,
                    const Rational& alpha, const Rational& beta);

}  // namespace bforge

#endif
