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

#ifndef BFORGE_LINALG_HPP
#define BFORGE_LINALG_HPP

#include <algorithm>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"

namespace bforge {

// Exact elimination routines. They compare against Scalar(0) directly and are meant for
// field types such as Rational; pivots are chosen by a fixed scan order.

template <class Scalar>
struct RowEchelon {
    Matrix<Scalar> reduced;
    std::vector<Index> pivots;
    Index rank() const noexcept { return static_cast<Index>(pivots.size()); }
};

template <class Scalar>
RowEchelon<Scalar> rref(Matrix<Scalar> m) {
    RowEchelon<Scalar> out;
    Index r = 0;
    for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
        Index piv = -1;
        for (Index i = r; i < m.rows(); ++i)
            if (m(i, c) != Scalar(0)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) m.row(piv).swap(m.row(r));
        const Scalar inv = Scalar(1) / m(r, c);
        m.row(r) *= inv;
        for (Index i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == Scalar(0)) continue;
            const Scalar f = m(i, c);
            m.row(i) -= f * m.row(r);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
    return rref(Matrix<typename Derived::Scalar>(m)).rank();
}

/// Columns form a basis of {x : m x = 0}.
template <class Scalar>
Matrix<Scalar> nullspace(const Matrix<Scalar>& m) {
    RowEchelon<Scalar> e = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    Matrix<Scalar> basis = Matrix<Scalar>::Zero(m.cols(), m.cols() - e.rank());
    Index col = 0;
    for (Index free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        basis(free, col) = Scalar(1);
        for (Index r = 0; r < e.rank(); ++r) basis(e.pivots[static_cast<std::size_t>(r)], col) = -e.reduced(r, free);
        ++col;
    }
    return basis;
}

enum class SolveStatus { unique, inconsistent, underdetermined };

template <class Scalar>
struct SolveResult {
    SolveStatus status;
    Matrix<Scalar> solution;  // set only when status == unique
    Index free_dimensions = 0;
};

/// Exact solution of A X = B.
template <class Scalar>
SolveResult<Scalar> solve_linear(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
    if (a.rows() != b.rows()) throw Error(ErrorCode::dimension_mismatch, "solve_linear: row counts differ");
    Matrix<Scalar> aug(a.rows(), a.cols() + b.cols());
    aug << a, b;
    RowEchelon<Scalar> e = rref(std::move(aug));
    for (Index c : e.pivots)
        if (c >= a.cols()) return {SolveStatus::inconsistent, {}, 0};
    if (e.rank() < a.cols()) return {SolveStatus::underdetermined, {}, a.cols() - e.rank()};
    return {SolveStatus::unique, e.reduced.block(0, a.cols(), a.cols(), b.cols()), 0};
}

template <class Scalar>
Matrix<Scalar> inverse(const Matrix<Scalar>& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::dimension_mismatch, "inverse of a non-square matrix");
    SolveResult<Scalar> r = solve_linear<Scalar>(m, identity<Scalar>(m.rows()));
    if (r.status != SolveStatus::unique) throw Error(ErrorCode::internal, "inverse of a singular matrix");
    return r.solution;
}

template <class Scalar>
Scalar determinant(Matrix<Scalar> m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::dimension_mismatch, "determinant of a non-square matrix");
    Scalar det(1);
    const Index n = m.rows();
    for (Index c = 0; c < n; ++c) {
        Index piv = -1;
        for (Index i = c; i < n; ++i)
            if (m(i, c) != Scalar(0)) {
                piv = i;
                break;
            }
        if (piv < 0) return Scalar(0);
        if (piv != c) {
            m.row(piv).swap(m.row(c));
            det = -det;
        }
        det *= m(c, c);
        for (Index i = c + 1; i < n; ++i) {
            if (m(i, c) == Scalar(0)) continue;
            const Scalar f = m(i, c) / m(c, c);
            m.row(i) -= f * m.row(c);
        }
    }
    return det;
}

template <class Scalar>
struct RankFactorization {
    Matrix<Scalar> x;  // k x rows
    Matrix<Scalar> y;  // k x cols
    Index inner() const noexcept { return x.rows(); }
};

/// M = X^T Y with k = rank(M): X^T collects the pivot columns of M, Y the nonzero rows of rref(M).
template <class Scalar>
RankFactorization<Scalar> rank_factorization(const Matrix<Scalar>& m) {
    RowEchelon<Scalar> e = rref(m);
    const Index k = e.rank();
    Matrix<Scalar> x(k, m.rows());
    for (Index i = 0; i < k; ++i) x.row(i) = m.col(e.pivots[static_cast<std::size_t>(i)]).transpose();
    return {std::move(x), e.reduced.topRows(k)};
}

struct Inertia {
    Index positive = 0;
    Index negative = 0;
    Index zero = 0;
    Index dimension() const noexcept { return positive + negative + zero; }
    bool balanced() const noexcept { return positive == negative && zero == 0; }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

template <class Scalar>
struct CongruenceBlock {
    std::vector<Index> indices;  // one index (1x1 pivot) or two (hyperbolic pair)
};

namespace detail {

template <class Scalar>
struct SymmetricReduction {
    Matrix<Scalar> t;  // T^T S T = d
    Matrix<Scalar> d;
    std::vector<CongruenceBlock<Scalar>> blocks;  // in pivot order, indices refer to the original ordering
};

// Congruence reduction keeping the original index order: D is block diagonal up to a
// symmetric permutation.
template <class Scalar>
SymmetricReduction<Scalar> symmetric_reduce(const Matrix<Scalar>& s) {
    const Index n = s.rows();
    Matrix<Scalar> w = s;
    Matrix<Scalar> t = identity<Scalar>(n);
    std::vector<bool> active(static_cast<std::size_t>(n), true);
    std::vector<CongruenceBlock<Scalar>> blocks;
    auto is_active = [&](Index i) { return active[static_cast<std::size_t>(i)]; };

    // Subtracts alpha*(index i) + beta*(index j) from index k on both sides.
    auto combine = [&](Index k, Index i, const Scalar& alpha, Index j, const Scalar& beta) {
        if (alpha != Scalar(0)) {
            w.row(k) -= alpha * w.row(i);
            t.col(k) -= alpha * t.col(i);
        }
        if (j >= 0 && beta != Scalar(0)) {
            w.row(k) -= beta * w.row(j);
            t.col(k) -= beta * t.col(j);
        }
        if (alpha != Scalar(0)) w.col(k) -= alpha * w.col(i);
        if (j >= 0 && beta != Scalar(0)) w.col(k) -= beta * w.col(j);
    };

    for (;;) {
        Index piv = -1;
        for (Index i = 0; i < n && piv < 0; ++i)
            if (is_active(i) && w(i, i) != Scalar(0)) piv = i;
        if (piv >= 0) {
            for (Index k = 0; k < n; ++k) {
                if (!is_active(k) || k == piv || w(k, piv) == Scalar(0)) continue;
                combine(k, piv, w(k, piv) / w(piv, piv), -1, Scalar(0));
            }
            active[static_cast<std::size_t>(piv)] = false;
            blocks.push_back({{piv}});
            continue;
        }
        Index pi = -1, pj = -1;
        for (Index i = 0; i < n && pi < 0; ++i) {
            if (!is_active(i)) continue;
            for (Index j = i + 1; j < n; ++j)
                if (is_active(j) && w(i, j) != Scalar(0)) {
                    pi = i;
                    pj = j;
                    break;
                }
        }
        if (pi < 0) break;
        const Scalar c = w(pi, pj);
        for (Index k = 0; k < n; ++k) {
            if (!is_active(k) || k == pi || k == pj) continue;
            const Scalar a = w(k, pi), b = w(k, pj);
            if (a == Scalar(0) && b == Scalar(0)) continue;
            combine(k, pi, b / c, pj, a / c);
        }
        active[static_cast<std::size_t>(pi)] = false;
        active[static_cast<std::size_t>(pj)] = false;
        blocks.push_back({{pi, pj}});
    }
    return {std::move(t), std::move(w), std::move(blocks)};
}

template <class Scalar>
Inertia block_inertia(const Matrix<Scalar>& d, const std::vector<CongruenceBlock<Scalar>>& blocks) {
    Inertia in;
    Index covered = 0;
    for (const auto& b : blocks) {
        if (b.indices.size() == 2) {
            ++in.positive;
            ++in.negative;
            covered += 2;
        } else {
            (d(b.indices[0], b.indices[0]) > Scalar(0) ? in.positive : in.negative) += 1;
            ++covered;
        }
    }
    in.zero = d.rows() - covered;
    return in;
}

}  // namespace detail

template <class Scalar>
struct CongruenceResult {
    Inertia inertia;
    Matrix<Scalar> t;                 // T^T S T = d
    Matrix<Scalar> d;                 // contiguous blocks in pivot order, zero tail
    std::vector<Index> block_sizes;   // 1 or 2 per nonzero block
};

template <class Scalar>
bool is_symmetric(const Matrix<Scalar>& s) {
    return s.rows() == s.cols() && exactly_equal(s, s.transpose());
}

template <class Scalar>
bool is_skew(const Matrix<Scalar>& s) {
    return s.rows() == s.cols() && exactly_equal(s, (-s.transpose()).eval());
}

/// Rational congruence to 1x1 and hyperbolic [[0,c],[c,0]] blocks; inertia by Sylvester's law.
template <class Scalar>
CongruenceResult<Scalar> inertia_congruence(const Matrix<Scalar>& s) {
    if (!is_symmetric(s)) throw Error(ErrorCode::not_symmetric, "inertia_congruence: matrix is not symmetric");
    detail::SymmetricReduction<Scalar> red = detail::symmetric_reduce(s);
    const Index n = s.rows();
    std::vector<Index> order;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    CongruenceResult<Scalar> out;
    for (const auto& b : red.blocks) {
        for (Index i : b.indices) {
            order.push_back(i);
            used[static_cast<std::size_t>(i)] = true;
        }
        out.block_sizes.push_back(static_cast<Index>(b.indices.size()));
    }
    for (Index i = 0; i < n; ++i)
        if (!used[static_cast<std::size_t>(i)]) order.push_back(i);
    out.t.resize(n, n);
    out.d.resize(n, n);
    for (Index a = 0; a < n; ++a) {
        out.t.col(a) = red.t.col(order[static_cast<std::size_t>(a)]);
        for (Index b = 0; b < n; ++b) out.d(a, b) = red.d(order[static_cast<std::size_t>(a)], order[static_cast<std::size_t>(b)]);
    }
    out.inertia = detail::block_inertia(red.d, red.blocks);
    return out;
}

template <class Scalar>
Matrix<Scalar> symplectic_unit(Index p) {
    Matrix<Scalar> j = Matrix<Scalar>::Zero(2 * p, 2 * p);
    j.topRightCorner(p, p) = identity<Scalar>(p);
    j.bottomLeftCorner(p, p) = -identity<Scalar>(p);
    return j;
}

template <class Scalar>
Matrix<Scalar> hyperbolic_unit(Index p) {
    Matrix<Scalar> q = Matrix<Scalar>::Zero(2 * p, 2 * p);
    q.topRightCorner(p, p) = identity<Scalar>(p);
    q.bottomLeftCorner(p, p) = identity<Scalar>(p);
    return q;
}

template <class Scalar>
struct SkewCongruenceResult {
    Index p = 0;
    Matrix<Scalar> t;  // T^T S T = blockdiag(J_p, 0)
};

/// Exact reduction of a skew-symmetric matrix to blockdiag(J_p, 0), J_p = [[0, I], [-I, 0]].
template <class Scalar>
SkewCongruenceResult<Scalar> skew_canonical_congruence(const Matrix<Scalar>& s) {
    if (!is_skew(s)) throw Error(ErrorCode::not_skew, "skew_canonical_congruence: matrix is not skew-symmetric");
    const Index n = s.rows();
    Matrix<Scalar> w = s;
    Matrix<Scalar> t = identity<Scalar>(n);
    std::vector<bool> active(static_cast<std::size_t>(n), true);
    std::vector<Index> firsts, seconds;
    auto is_active = [&](Index i) { return active[static_cast<std::size_t>(i)]; };
    for (;;) {
        Index pi = -1, pj = -1;
        for (Index i = 0; i < n && pi < 0; ++i) {
            if (!is_active(i)) continue;
            for (Index j = i + 1; j < n; ++j)
                if (is_active(j) && w(i, j) != Scalar(0)) {
                    pi = i;
                    pj = j;
                    break;
                }
        }
        if (pi < 0) break;
        const Scalar c = w(pi, pj);
        for (Index k = 0; k < n; ++k) {
            if (!is_active(k) || k == pi || k == pj) continue;
            const Scalar a = w(k, pi), b = w(k, pj);
            if (a == Scalar(0) && b == Scalar(0)) continue;
            const Scalar alpha = b / c, beta = -a / c;
            w.row(k) -= alpha * w.row(pi) + beta * w.row(pj);
            w.col(k) -= alpha * w.col(pi) + beta * w.col(pj);
            t.col(k) -= alpha * t.col(pi) + beta * t.col(pj);
        }
        const Scalar inv = Scalar(1) / c;
        w.row(pj) *= inv;
        w.col(pj) *= inv;
        t.col(pj) *= inv;
        active[static_cast<std::size_t>(pi)] = false;
        active[static_cast<std::size_t>(pj)] = false;
        firsts.push_back(pi);
        seconds.push_back(pj);
    }
    std::vector<Index> order = firsts;
    order.insert(order.end(), seconds.begin(), seconds.end());
    for (Index i = 0; i < n; ++i)
        if (is_active(i)) order.push_back(i);
    SkewCongruenceResult<Scalar> out;
    out.p = static_cast<Index>(firsts.size());
    out.t.resize(n, n);
    for (Index a = 0; a < n; ++a) out.t.col(a) = t.col(order[static_cast<std::size_t>(a)]);
    return out;
}

}  // namespace bforge

#endif
