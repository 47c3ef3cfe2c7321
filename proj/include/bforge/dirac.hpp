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

// Dirac structures given in kernel form F(d/dz) f + E(d/dz) e = 0 on an interval: the
// algebraic conditions, the image representation, the boundary map and its signature.

#ifndef BFORGE_DIRAC_HPP
#define BFORGE_DIRAC_HPP

#include <bforge/linalg.hpp>
#include <bforge/types.hpp>

#include <string>

namespace bforge {

/// Outcome of the two algebraic tests, with exact witnesses.
struct DiracConditions {
    RPolyMatrix skew_residual;  // F(-s) E^T(s) + E(-s) F^T(s), zero when the skew condition holds
    RPoly minors_gcd;           // gcd of the m x m minors of [F(s) E(s)]
    bool skew_ok = false;
    bool rank_ok = false;
    bool passed() const noexcept { return skew_ok && rank_ok; }
};

DiracConditions check_dirac_conditions(const RPolyMatrix& f, const RPolyMatrix& e);

/// A kernel pair (F, E) known to satisfy both conditions.
class DiracPair {
   public:
    const RPolyMatrix& f() const noexcept { return f_; }
    const RPolyMatrix& e() const noexcept { return e_; }
    Index size() const noexcept { return f_.rows(); }

   private:
    DiracPair(RPolyMatrix f, RPolyMatrix e) : f_(std::move(f)), e_(std::move(e)) {}
    friend DiracPair validate_dirac_pair(const RPolyMatrix&, const RPolyMatrix&);

    RPolyMatrix f_;
    RPolyMatrix e_;
};

/// Throws SkewConditionFailed or RankConditionFailed with the witness in the message.
DiracPair validate_dirac_pair(const RPolyMatrix& f, const RPolyMatrix& e);

/// Solutions written as f = N_f(d/dz) l, e = N_e(d/dz) l.
struct ImageRep {
    RPolyMatrix n_f;
    RPolyMatrix n_e;
    RPolyMatrix stacked() const { return vstack(n_f, n_e); }
};

/// N_f(s) = E^T(-s), N_e(s) = F^T(-s); the annihilator of [F(s) E(s)].
ImageRep image_representation(const DiracPair& pair);

/// The form of e1^T f2 + e2^T f1 in the latent variables: N_e^T(zeta) N_f(eta) + N_f^T(zeta) N_e(eta).
RTwoVar pairing_form(const ImageRep& rep);

enum class EntryPoint { kernel, skew_adjoint };

/*
   Boundary data of a Dirac structure. With b = Z(d/dz) l the identity
   d/dz [b1^T Sigma b2] = e1^T f2 + e2^T f1 holds on every pair of solutions, and
   (zeta + eta) Z^T(zeta) Sigma Z(eta) equals `pairing`.
*/
struct BoundaryStructure {
    EntryPoint entry = EntryPoint::kernel;
    RPolyMatrix f;  // kernel operators
    RPolyMatrix e;
    ImageRep rep;
    RTwoVar pairing;
    RTwoVar pi;
    RPolyMatrix z;
    RMatrix sigma;
    Inertia inertia;

    Index dimension() const noexcept { return z.rows(); }
    Index ports() const noexcept { return rep.n_f.rows(); }
    Index latent_dim() const noexcept { return rep.n_f.cols(); }
};

BoundaryStructure boundary_structure(const DiracPair& pair);

/// J(s) + J^T(-s), zero iff J is formally skew-adjoint.
struct SkewAdjointCheck {
    RPolyMatrix residual;
    bool passed() const noexcept { return residual.is_zero(); }
};

SkewAdjointCheck check_skew_adjoint(const RPolyMatrix& j);

/*
   Entry point f = J(d/dz) e for formally skew-adjoint J, with e as the latent variable.
   Kernel form (I, -J), image (J, I), pairing J^T(zeta) + J(eta). Throws NotSkewAdjoint.
*/
BoundaryStructure skew_adjoint_structure(const RPolyMatrix& j);

/// f = N_f(d/dz) l and e = N_e(d/dz) l.
struct FlowEffort {
    RPolyMatrix f;
    RPolyMatrix e;
};

FlowEffort flow_effort(const ImageRep& rep, const RPolyMatrix& latent);

/// b(z) = Z(d/dz) l(z) as a polynomial vector.
RPolyMatrix boundary_trajectory(const RPolyMatrix& z, const RPolyMatrix& latent);
RVector boundary_value(const RPolyMatrix& z, const RPolyMatrix& latent, const Rational& at);

/*
   Real T with T^T Q_p T = Sigma, Q_p = [[0, I_p], [I_p, 0]]. Boundary power variables are
   (f_d; e_d) = T b, so that b1^T Sigma b2 = e_d1^T f_d2 + e_d2^T f_d1.
*/
struct PowerSplit {
    Matrix<double> t;
    Index p = 0;
    double residual = 0.0;  // max-norm of T^T Q_p T - Sigma
    double tolerance = 1e-9;
    bool within_tolerance() const noexcept { return residual <= tolerance; }
};

template <class Scalar>
Matrix<Scalar> hyperbolic_form(Index p) {
    Matrix<Scalar> q = Matrix<Scalar>::Zero(2 * p, 2 * p);
    q.topRightCorner(p, p) = identity<Scalar>(p);
    q.bottomLeftCorner(p, p) = identity<Scalar>(p);
    return q;
}

/// Throws UnbalancedSignature (with the inertia) unless Sigma has p positive and p negative eigenvalues.
PowerSplit canonical_power_split(const RMatrix& sigma, double tolerance = 1e-9);

/// blockdiag(Sigma, -Sigma) acting on (b(beta); b(alpha)); balanced by construction.
struct TwoPointForm {
    RMatrix sigma;
    PowerSplit split;
};

TwoPointForm two_point_form(const BoundaryStructure& structure, double tolerance = 1e-9);

/// b1(gamma) == b2(gamma) where l1 lives on [alpha, gamma] and l2 on [gamma, beta]. Throws NotAbutting.
bool concatenation_compatible(const BoundaryStructure& structure, const Trajectory& first, const Trajectory& second);

std::string to_string(const Inertia& in);

}  // namespace bforge

#endif
