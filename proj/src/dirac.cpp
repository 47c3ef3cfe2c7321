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

#include <bforge/dirac.hpp>

#include <bforge/poly_algebra.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace bforge {

namespace {

template <class T>
std::string show(const T& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

void require_square_pair(const RPolyMatrix& f, const RPolyMatrix& e, const char* what) {
    if (f.rows() != f.cols() || e.rows() != e.cols() || f.rows() != e.rows())
        throw Error(ErrorCode::dimension_mismatch, std::string(what) + ": operators must be square of equal size");
}

}  // namespace

std::string to_string(const Inertia& in) {
    std::ostringstream os;
    os << "(" << in.positive << ", " << in.negative << ", " << in.zero << ")";
    return os.str();
}

DiracConditions check_dirac_conditions(const RPolyMatrix& f, const RPolyMatrix& e) {
    require_square_pair(f, e, "check_dirac_conditions");
    DiracConditions out;
    out.skew_residual = para_conjugate(f) * e.transpose() + para_conjugate(e) * f.transpose();
    out.skew_ok = out.skew_residual.is_zero();
    out.minors_gcd = minors_gcd(hstack(f, e));
    out.rank_ok = out.minors_gcd.degree() == Index(0);
    return out;
}

DiracPair validate_dirac_pair(const RPolyMatrix& f, const RPolyMatrix& e) {
    DiracConditions c = check_dirac_conditions(f, e);
    if (!c.skew_ok)
        throw Error(ErrorCode::skew_condition_failed,
                    "F(-s)E^T(s) + E(-s)F^T(s) = " + show(c.skew_residual) + " is not zero");
    if (!c.rank_ok)
        throw Error(ErrorCode::rank_condition_failed,
                    "gcd of the maximal minors of [F E] is " + to_string(c.minors_gcd) + ", not a nonzero constant");
    return DiracPair(f, e);
}

ImageRep image_representation(const DiracPair& pair) {
    ImageRep rep{para_conjugate(pair.e()).transpose(), para_conjugate(pair.f()).transpose()};
    if (!(pair.f() * rep.n_f + pair.e() * rep.n_e).is_zero())
        throw Error(ErrorCode::internal, "image representation does not annihilate the kernel operator");
    if (!full_rank_everywhere(rep.stacked().transpose()))
        throw Error(ErrorCode::internal, "image representation loses rank");
    return rep;
}

RTwoVar pairing_form(const ImageRep& rep) { return outer(rep.n_e, rep.n_f) + outer(rep.n_f, rep.n_e); }

namespace {

BoundaryStructure finish_structure(EntryPoint entry, RPolyMatrix f, RPolyMatrix e, ImageRep rep) {
    BoundaryStructure out;
    out.entry = entry;
    out.f = std::move(f);
    out.e = std::move(e);
    out.rep = std::move(rep);
    out.pairing = pairing_form(out.rep);
    if (!on_antidiagonal(out.pairing).is_zero())
        throw Error(ErrorCode::internal, "pairing form does not vanish on zeta = -eta");
    out.pi = div_zeta_plus_eta(out.pairing);
    SymmetricFactorization<Rational> fac = factor_symmetric(out.pi);
    out.z = std::move(fac.z);
    out.sigma = std::move(fac.sigma);
    out.inertia = fac.inertia;
    if (!(mul_zeta_plus_eta(outer(out.z, out.sigma, out.z)) == out.pairing))
        throw Error(ErrorCode::internal, "boundary factorization fails to reconstruct the pairing form");
    return out;
}

}  // namespace

BoundaryStructure boundary_structure(const DiracPair& pair) {
    return finish_structure(EntryPoint::kernel, pair.f(), pair.e(), image_representation(pair));
}

SkewAdjointCheck check_skew_adjoint(const RPolyMatrix& j) {
    if (j.rows() != j.cols()) throw Error(ErrorCode::dimension_mismatch, "skew-adjointness needs a square operator");
    return {j + para_conjugate(j).transpose()};
}

BoundaryStructure skew_adjoint_structure(const RPolyMatrix& j) {
    SkewAdjointCheck check = check_skew_adjoint(j);
    if (!check.passed())
        throw Error(ErrorCode::not_skew_adjoint, "J(s) + J^T(-s) = " + show(check.residual) + " is not zero");
    const Index m = j.rows();
    return finish_structure(EntryPoint::skew_adjoint, RPolyMatrix::identity(m), -j, ImageRep{j, RPolyMatrix::identity(m)});
}

FlowEffort flow_effort(const ImageRep& rep, const RPolyMatrix& latent) {
    return {apply(rep.n_f, latent), apply(rep.n_e, latent)};
}

RPolyMatrix boundary_trajectory(const RPolyMatrix& z, const RPolyMatrix& latent) { return apply(z, latent); }

RVector boundary_value(const RPolyMatrix& z, const RPolyMatrix& latent, const Rational& at) {
    return boundary_trajectory(z, latent)(at);
}

PowerSplit canonical_power_split(const RMatrix& sigma, double tolerance) {
    const Inertia in = inertia_congruence(sigma).inertia;
    if (!in.balanced())
        throw Error(ErrorCode::unbalanced_signature, "signature " + to_string(in) + " has no boundary power split");
    const Index n = sigma.rows(), p = n / 2;
    PowerSplit out;
    out.p = p;
    out.tolerance = tolerance;
    if (exactly_equal(sigma, hyperbolic_form<Rational>(p))) {
        out.t = Matrix<double>::Identity(n, n);
        return out;
    }
    // Sigma = M^T diag(I_p, -I_p) M from the eigendecomposition, then diag(I_p, -I_p) = R Q_p R.
    const Matrix<double> s = to_double(sigma);
    Eigen::SelfAdjointEigenSolver<Matrix<double>> eig(s);
    Matrix<double> m(n, n);
    // Eigenvalues ascend: the last p are the positive ones, the first p the negative ones.
    for (Index i = 0; i < n; ++i) {
        const Index row = i >= p ? n - 1 - i : p + i;
        m.row(row) = std::sqrt(std::abs(eig.eigenvalues()(i))) * eig.eigenvectors().col(i).transpose();
    }
    Matrix<double> r(n, n);
    const double h = 1.0 / std::sqrt(2.0);
    r << h * Matrix<double>::Identity(p, p), h * Matrix<double>::Identity(p, p), h * Matrix<double>::Identity(p, p),
        -h * Matrix<double>::Identity(p, p);
    out.t = r * m;
    out.residual = (out.t.transpose() * hyperbolic_form<double>(p) * out.t - s).cwiseAbs().maxCoeff();
    return out;
}

TwoPointForm two_point_form(const BoundaryStructure& structure, double tolerance) {
    const Index n = structure.dimension();
    TwoPointForm out;
    out.sigma = RMatrix::Zero(2 * n, 2 * n);
    out.sigma.topLeftCorner(n, n) = structure.sigma;
    out.sigma.bottomRightCorner(n, n) = -structure.sigma;
    out.split = canonical_power_split(out.sigma, tolerance);
    return out;
}

bool concatenation_compatible(const BoundaryStructure& structure, const Trajectory& first, const Trajectory& second) {
    if (first.beta != second.alpha)
        throw Error(ErrorCode::not_abutting, "intervals do not meet: " + to_string(first.beta) + " vs " + to_string(second.alpha));
    const Rational& gamma = first.beta;
    return exactly_equal(boundary_value(structure.z, first.latent, gamma), boundary_value(structure.z, second.latent, gamma));
}

}  // namespace bforge
