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

// Lagrangian subspaces in kernel form P^T(d/dz) x + S^T(d/dz) e = 0 under the symplectic
// pairing e1^T x2 - e2^T x1.

#ifndef BFORGE_LAGRANGE_HPP
#define BFORGE_LAGRANGE_HPP

#include <bforge/dirac.hpp>

namespace bforge {

struct LagrangeConditions {
    RPolyMatrix symmetry_residual;  // P^T(-s) S(s) - S^T(-s) P(s)
    RPoly minors_gcd;               // gcd of the maximal minors of [P(s); S(s)]
    bool symmetry_ok = false;
    bool rank_ok = false;
    bool passed() const noexcept { return symmetry_ok && rank_ok; }
};

LagrangeConditions check_lagrange_conditions(const RPolyMatrix& p, const RPolyMatrix& s);

class LagrangePair {
   public:
    const RPolyMatrix& p() const noexcept { return p_; }
    const RPolyMatrix& s() const noexcept { return s_; }
    Index size() const noexcept { return p_.rows(); }

   private:
    LagrangePair(RPolyMatrix p, RPolyMatrix s) : p_(std::move(p)), s_(std::move(s)) {}
    friend LagrangePair validate_lagrange_pair(const RPolyMatrix&, const RPolyMatrix&);

    RPolyMatrix p_;
    RPolyMatrix s_;
};

/// Throws SymmetryConditionFailed or RankConditionFailed with the witness in the message.
LagrangePair validate_lagrange_pair(const RPolyMatrix& p, const RPolyMatrix& s);

/// x = N_x(d/dz) l, e = N_e(d/dz) l with N_x(s) = S(-s), N_e(s) = -P(-s).
struct LagrangeRep {
    RPolyMatrix n_x;
    RPolyMatrix n_e;
};

/*
   Theta = (zeta + eta)^{-1} [N_x^T(zeta) N_e(eta) - N_e^T(zeta) N_x(eta)] = W^T(zeta) J_p W(eta),
   so with w = W(d/dz) l = (x_d; e_d) we get d/dz [w1^T J_p w2] = x1^T e2 - x2^T e1.
*/
struct LagrangeBoundary {
    LagrangePair pair;
    LagrangeRep rep;
    RTwoVar pairing;
    RTwoVar theta;
    RPolyMatrix w;  // 2p x m
    Index p = 0;

    Index dimension() const noexcept { return w.rows(); }
    Index ports() const noexcept { return rep.n_x.rows(); }
    Index latent_dim() const noexcept { return rep.n_x.cols(); }
};

LagrangeBoundary lagrange_boundary(const LagrangePair& pair);

struct StateEffort {
    RPolyMatrix x;
    RPolyMatrix e;
};

StateEffort state_effort(const LagrangeRep& rep, const RPolyMatrix& latent);

/// int_alpha^beta (e1^T x2 - e2^T x1) dz + [x_d1^T e_d2 - e_d1^T x_d2]_alpha^beta, zero on the subspace.
Rational lagrange_form(const LagrangeBoundary& b, const RPolyMatrix& l1, const RPolyMatrix& l2, const Rational& alpha,
                    const Rational& beta);

}  // namespace bforge

#endif
