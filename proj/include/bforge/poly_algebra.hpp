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

#ifndef BFORGE_POLY_ALGEBRA_HPP
#define BFORGE_POLY_ALGEBRA_HPP

#include <algorithm>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"
#include "poly_matrix.hpp"

namespace bforge {

/// Determinant of a square polynomial matrix by evaluation at integer nodes and interpolation.
template <class Scalar>
Poly<Scalar> determinant(const PolyMatrix<Scalar>& p) {
    if (p.rows() != p.cols()) throw Error(ErrorCode::dimension_mismatch, "determinant of a non-square polynomial matrix");
    const Index n = p.rows();
    if (n == 0) return Poly<Scalar>(Scalar(1));
    // deg det <= sum of row degrees; a zero row forces det = 0
    Index bound = 0;
    for (Index i = 0; i < n; ++i) {
        Index row_deg = -1;
        for (Index k = 0; k < p.length(); ++k)
            if (!is_exactly_zero(p.coeffs()[static_cast<std::size_t>(k)].row(i))) row_deg = k;
        if (row_deg < 0) return Poly<Scalar>();
        bound += row_deg;
    }
    std::vector<Scalar> xs, ys;
    for (Index t = 0; t <= bound; ++t) {
        xs.push_back(Scalar(t));
        ys.push_back(determinant<Scalar>(p(Scalar(t))));
    }
    return interpolate(xs, ys);
}

/// Monic gcd of all rows x rows minors of a wide matrix; the zero polynomial when all minors vanish.
template <class Scalar>
Poly<Scalar> minors_gcd(const PolyMatrix<Scalar>& p) {
    const Index r = p.rows(), c = p.cols();
    if (r > c) throw Error(ErrorCode::dimension_mismatch, "minors_gcd expects rows <= cols");
    if (r == 0) return Poly<Scalar>(Scalar(1));
    std::vector<Index> pick(static_cast<std::size_t>(r));
    for (Index i = 0; i < r; ++i) pick[static_cast<std::size_t>(i)] = i;
    Poly<Scalar> g;
    for (;;) {
        Poly<Scalar> minor = determinant(p.select_cols(pick));
        if (!minor.is_zero()) {
            g = g.is_zero() ? monic(minor) : gcd(g, minor);
            if (g.degree() == Index(0)) return g;
        }
        // next combination in lexicographic order
        Index i = r - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == c - r + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (Index j = i + 1; j < r; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return g;
}

/// rank P(s0) = rows for every complex s0, decided by the minors gcd being a nonzero constant.
template <class Scalar>
bool full_rank_everywhere(const PolyMatrix<Scalar>& p) {
    if (p.rows() > p.cols()) return false;
    return minors_gcd(p).degree() == Index(0);
}

/*
   Basis of the polynomial solutions e(z) of degree <= d of G(d/dz) e = 0. Each basis
   element is an m x 1 polynomial vector; the coefficients of e are the unknowns and the
   coefficients of G(d/dz) e in z^0..z^d give the linear constraints.
*/
template <class Scalar>
std::vector<PolyMatrix<Scalar>> polynomial_kernel_basis(const PolyMatrix<Scalar>& g, Index d) {
    if (d < 0) throw Error(ErrorCode::dimension_mismatch, "polynomial_kernel_basis: negative degree bound");
    const Index r = g.rows(), m = g.cols();
    const Index unknowns = m * (d + 1);
    Matrix<Scalar> eqs = Matrix<Scalar>::Zero(r * (d + 1), unknowns);
    // coefficient of z^t in G(d/dz) e: sum_j G_j (t+j)!/t! e_{t+j}
    for (Index t = 0; t <= d; ++t)
        for (Index j = 0; j < g.length() && t + j <= d; ++j) {
            Scalar falling(1);
            for (Index u = 1; u <= j; ++u) falling *= Scalar(t + u);
            eqs.block(t * r, (t + j) * m, r, m) += falling * g.coeffs()[static_cast<std::size_t>(j)];
        }
    Matrix<Scalar> basis = nullspace(eqs);
    std::vector<PolyMatrix<Scalar>> out;
    for (Index b = 0; b < basis.cols(); ++b) {
        std::vector<Matrix<Scalar>> c;
        for (Index k = 0; k <= d; ++k) c.push_back(basis.block(k * m, b, m, 1));
        out.emplace_back(m, 1, std::move(c));
    }
    return out;
}

}  // namespace bforge

#endif
