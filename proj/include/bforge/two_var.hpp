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

#ifndef BFORGE_TWO_VAR_HPP
#define BFORGE_TWO_VAR_HPP

#include <map>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "poly_matrix.hpp"

namespace bforge {

/*
   Two-variable polynomial matrix Phi(zeta, eta) = sum_{k,l} Phi_{k,l} zeta^k eta^l, kept as a
   sparse map (k, l) -> p x q block. Only nonzero blocks are stored.
*/
template <class Scalar>
class TwoVarPolyMatrix {
   public:
    using Block = Matrix<Scalar>;
    using Key = std::pair<Index, Index>;

    TwoVarPolyMatrix() : TwoVarPolyMatrix(0, 0) {}
    TwoVarPolyMatrix(Index p, Index q) : p_(p), q_(q) {}

    static TwoVarPolyMatrix constant(const Block& c) {
        TwoVarPolyMatrix out(c.rows(), c.cols());
        out.add(0, 0, c);
        return out;
    }

    Index rows() const noexcept { return p_; }
    Index cols() const noexcept { return q_; }
    bool is_zero() const noexcept { return blocks_.empty(); }
    const std::map<Key, Block>& blocks() const noexcept { return blocks_; }

    /// Largest power of zeta or eta present; 0 for the zero matrix.
    Index max_index() const noexcept {
        Index m = 0;
        for (const auto& [key, b] : blocks_) m = std::max({m, key.first, key.second});
        return m;
    }

    Block block(Index k, Index l) const {
        auto it = blocks_.find({k, l});
        return it == blocks_.end() ? Block::Zero(p_, q_) : it->second;
    }

    void add(Index k, Index l, const Block& b) {
        if (b.rows() != p_ || b.cols() != q_) throw Error(ErrorCode::dimension_mismatch, "two-variable block shape mismatch");
        if (is_exactly_zero(b)) return;
        auto [it, inserted] = blocks_.try_emplace({k, l}, b);
        if (!inserted) {
            it->second += b;
            if (is_exactly_zero(it->second)) blocks_.erase(it);
        }
    }

    /// Phi^T(eta, zeta): block (k, l) becomes the transpose of block (l, k).
    TwoVarPolyMatrix transposed_swap() const {
        TwoVarPolyMatrix out(q_, p_);
        for (const auto& [key, b] : blocks_) out.add(key.second, key.first, b.transpose());
        return out;
    }

    bool is_symmetric() const { return p_ == q_ && *this == transposed_swap(); }
    bool is_skew() const { return p_ == q_ && *this == -transposed_swap(); }

    TwoVarPolyMatrix& operator+=(const TwoVarPolyMatrix& o) {
        if (o.p_ != p_ || o.q_ != q_) throw Error(ErrorCode::dimension_mismatch, "two-variable sum shape mismatch");
        for (const auto& [key, b] : o.blocks_) add(key.first, key.second, b);
        return *this;
    }
    TwoVarPolyMatrix& operator*=(const Scalar& c) {
        if (c == Scalar(0)) {
            blocks_.clear();
            return *this;
        }
        for (auto& [key, b] : blocks_) b *= c;
        return *this;
    }
    friend TwoVarPolyMatrix operator+(TwoVarPolyMatrix a, const TwoVarPolyMatrix& b) { return a += b; }
    friend TwoVarPolyMatrix operator-(TwoVarPolyMatrix a) { return a *= Scalar(-1); }
    friend TwoVarPolyMatrix operator-(TwoVarPolyMatrix a, const TwoVarPolyMatrix& b) { return a += -b; }
    friend TwoVarPolyMatrix operator*(const Scalar& c, TwoVarPolyMatrix a) { return a *= c; }

    friend bool operator==(const TwoVarPolyMatrix& a, const TwoVarPolyMatrix& b) {
        if (a.p_ != b.p_ || a.q_ != b.q_ || a.blocks_.size() != b.blocks_.size()) return false;
        for (auto ia = a.blocks_.begin(), ib = b.blocks_.begin(); ia != a.blocks_.end(); ++ia, ++ib)
            if (ia->first != ib->first || !exactly_equal(ia->second, ib->second)) return false;
        return true;
    }

   private:
    Index p_;
    Index q_;
    std::map<Key, Block> blocks_;
};

/// Dense coefficient matrix: ((M+1)p) x ((M+1)q) with block (k, l) = Phi_{k,l}.
template <class Scalar>
struct CoeffMatrix {
    Matrix<Scalar> dense;
    Index p = 0;
    Index q = 0;
    Index max_index = 0;
};

template <class Scalar>
CoeffMatrix<Scalar> to_coeff(const TwoVarPolyMatrix<Scalar>& phi) {
    const Index m = phi.max_index();
    CoeffMatrix<Scalar> c{Matrix<Scalar>::Zero((m + 1) * phi.rows(), (m + 1) * phi.cols()), phi.rows(), phi.cols(), m};
    for (const auto& [key, b] : phi.blocks())
        c.dense.block(key.first * phi.rows(), key.second * phi.cols(), phi.rows(), phi.cols()) = b;
    return c;
}

template <class Scalar>
TwoVarPolyMatrix<Scalar> from_coeff(const CoeffMatrix<Scalar>& c) {
    TwoVarPolyMatrix<Scalar> out(c.p, c.q);
    if (c.p == 0 || c.q == 0) return out;
    const Index kmax = c.dense.rows() / c.p, lmax = c.dense.cols() / c.q;
    for (Index k = 0; k < kmax; ++k)
        for (Index l = 0; l < lmax; ++l) out.add(k, l, c.dense.block(k * c.p, l * c.q, c.p, c.q));
    return out;
}

/// X^T(zeta) Y(eta).
template <class Scalar>
TwoVarPolyMatrix<Scalar> outer(const PolyMatrix<Scalar>& x, const PolyMatrix<Scalar>& y) {
    if (x.rows() != y.rows()) throw Error(ErrorCode::dimension_mismatch, "outer: inner dimensions differ");
    TwoVarPolyMatrix<Scalar> out(x.cols(), y.cols());
    for (Index k = 0; k < x.length(); ++k)
        for (Index l = 0; l < y.length(); ++l)
            out.add(k, l, x.coeffs()[static_cast<std::size_t>(k)].transpose() * y.coeffs()[static_cast<std::size_t>(l)]);
    return out;
}

/// X^T(zeta) Mid Y(eta).
template <class Scalar>
TwoVarPolyMatrix<Scalar> outer(const PolyMatrix<Scalar>& x, const Matrix<Scalar>& mid, const PolyMatrix<Scalar>& y) {
    return outer(x, mid * y);
}

/// Sum_{k,l} [d^k v]^T Phi_{k,l} [d^l w] for polynomial column vectors v, w.
template <class Scalar>
Poly<Scalar> bdf_apply(const TwoVarPolyMatrix<Scalar>& phi, const PolyMatrix<Scalar>& v, const PolyMatrix<Scalar>& w) {
    if (v.cols() != 1 || w.cols() != 1 || v.rows() != phi.rows() || w.rows() != phi.cols())
        throw Error(ErrorCode::dimension_mismatch, "bdf_apply: function dimensions do not match the form");
    const Index m = phi.max_index();
    std::vector<PolyMatrix<Scalar>> dv{v}, dw{w};
    for (Index k = 1; k <= m; ++k) {
        dv.push_back(derivative(dv.back()));
        dw.push_back(derivative(dw.back()));
    }
    PolyMatrix<Scalar> acc(1, 1);
    for (const auto& [key, b] : phi.blocks())
        acc += dv[static_cast<std::size_t>(key.first)].transpose() * (b * dw[static_cast<std::size_t>(key.second)]);
    return acc.entry(0, 0);
}

/// (zeta + eta) Phi(zeta, eta).
template <class Scalar>
TwoVarPolyMatrix<Scalar> mul_zeta_plus_eta(const TwoVarPolyMatrix<Scalar>& phi) {
    TwoVarPolyMatrix<Scalar> out(phi.rows(), phi.cols());
    for (const auto& [key, b] : phi.blocks()) {
        out.add(key.first + 1, key.second, b);
        out.add(key.first, key.second + 1, b);
    }
    return out;
}

/// Phi(-eta, eta) as a polynomial matrix in eta.
template <class Scalar>
PolyMatrix<Scalar> on_antidiagonal(const TwoVarPolyMatrix<Scalar>& phi) {
    std::vector<Matrix<Scalar>> c(static_cast<std::size_t>(2 * phi.max_index() + 1), Matrix<Scalar>::Zero(phi.rows(), phi.cols()));
    for (const auto& [key, b] : phi.blocks()) {
        if (key.first % 2 == 0)
            c[static_cast<std::size_t>(key.first + key.second)] += b;
        else
            c[static_cast<std::size_t>(key.first + key.second)] -= b;
    }
    return PolyMatrix<Scalar>(phi.rows(), phi.cols(), std::move(c));
}

/// The unique Pi with (zeta + eta) Pi = Phi; throws NotDivisible unless Phi(-eta, eta) = 0.
template <class Scalar>
TwoVarPolyMatrix<Scalar> div_zeta_plus_eta(const TwoVarPolyMatrix<Scalar>& phi) {
    if (!on_antidiagonal(phi).is_zero())
        throw Error(ErrorCode::not_divisible, "two-variable matrix does not vanish on zeta = -eta");
    using Row = std::map<Index, Matrix<Scalar>>;  // eta power -> block
    Index kmax = 0;
    for (const auto& [key, b] : phi.blocks()) kmax = std::max(kmax, key.first);
    std::vector<Row> c(static_cast<std::size_t>(kmax + 1));
    for (const auto& [key, b] : phi.blocks()) c[static_cast<std::size_t>(key.first)][key.second] = b;

    auto minus_eta_times = [&](const Row& r) {
        Row out;
        for (const auto& [l, b] : r) out[l + 1] = -b;
        return out;
    };
    auto sum = [](Row a, const Row& b) {
        for (const auto& [l, m] : b) {
            auto [it, inserted] = a.try_emplace(l, m);
            if (!inserted) it->second += m;
        }
        return a;
    };
    // C_k = Q_{k-1} + eta Q_k: synthetic division at zeta = -eta, from the top power down
    std::vector<Row> q(static_cast<std::size_t>(kmax));
    Row carry;
    for (Index k = kmax; k >= 1; --k) {
        carry = sum(c[static_cast<std::size_t>(k)], minus_eta_times(carry));
        q[static_cast<std::size_t>(k - 1)] = carry;
    }
    Row remainder = sum(c[0], minus_eta_times(carry));
    for (const auto& [l, b] : remainder)
        if (!is_exactly_zero(b)) throw Error(ErrorCode::internal, "nonzero remainder after division by zeta + eta");

    TwoVarPolyMatrix<Scalar> out(phi.rows(), phi.cols());
    for (Index k = 0; k < kmax; ++k)
        for (const auto& [l, b] : q[static_cast<std::size_t>(k)]) out.add(k, l, b);
    return out;
}

template <class Scalar>
struct GeneralFactorization {
    PolyMatrix<Scalar> x;  // k x p
    PolyMatrix<Scalar> y;  // k x q
    Index inner() const noexcept { return x.rows(); }
};

/// Minimal Phi = X^T(zeta) Y(eta) with k = rank of the coefficient matrix.
template <class Scalar>
GeneralFactorization<Scalar> factor_general(const TwoVarPolyMatrix<Scalar>& phi) {
    CoeffMatrix<Scalar> c = to_coeff(phi);
    RankFactorization<Scalar> rf = rank_factorization(c.dense);
    return {from_coefficient_row(rf.x, phi.rows()), from_coefficient_row(rf.y, phi.cols())};
}

template <class Scalar>
struct SymmetricFactorization {
    PolyMatrix<Scalar> z;   // n x q
    Matrix<Scalar> sigma;   // n x n, symmetric and invertible
    Inertia inertia;        // of sigma: the coefficient matrix's signature, no zero part
    Index dimension() const noexcept { return z.rows(); }
};

/*
   Minimal Phi = Z^T(zeta) Sigma Z(eta). The coefficient matrix is reduced by rational
   congruence T^T C T = D; with U = T^{-1} we get C = U^T D U and keep the rows of U that
   belong to nonzero blocks of D, in their original order.
*/
template <class Scalar>
SymmetricFactorization<Scalar> factor_symmetric(const TwoVarPolyMatrix<Scalar>& phi) {
    if (!phi.is_symmetric()) throw Error(ErrorCode::not_symmetric, "factor_symmetric: form is not symmetric");
    CoeffMatrix<Scalar> c = to_coeff(phi);
    detail::SymmetricReduction<Scalar> red = detail::symmetric_reduce(c.dense);
    std::vector<Index> keep;
    for (const auto& b : red.blocks) keep.insert(keep.end(), b.indices.begin(), b.indices.end());
    std::sort(keep.begin(), keep.end());
    const Index n = static_cast<Index>(keep.size());
    Matrix<Scalar> u = inverse(red.t);
    Matrix<Scalar> ztilde(n, u.cols());
    Matrix<Scalar> sigma(n, n);
    for (Index a = 0; a < n; ++a) {
        ztilde.row(a) = u.row(keep[static_cast<std::size_t>(a)]);
        for (Index b = 0; b < n; ++b) sigma(a, b) = red.d(keep[static_cast<std::size_t>(a)], keep[static_cast<std::size_t>(b)]);
    }
    Inertia in = detail::block_inertia(red.d, red.blocks);
    in.zero = 0;
    return {from_coefficient_row(ztilde, phi.cols()), std::move(sigma), in};
}

template <class Scalar>
struct SkewFactorization {
    PolyMatrix<Scalar> w;  // 2p x q
    Index p = 0;
};

/// Minimal Phi = W^T(zeta) J_p W(eta) for skew Phi, exact over the rationals.
template <class Scalar>
SkewFactorization<Scalar> factor_skew(const TwoVarPolyMatrix<Scalar>& phi) {
    if (!phi.is_skew()) throw Error(ErrorCode::not_skew, "factor_skew: form is not skew");
    CoeffMatrix<Scalar> c = to_coeff(phi);
    SkewCongruenceResult<Scalar> red = skew_canonical_congruence(c.dense);
    if (2 * red.p != rank(c.dense)) throw Error(ErrorCode::odd_rank, "factor_skew: rank of the coefficient matrix is odd");
    Matrix<Scalar> u = inverse(red.t);
    return {from_coefficient_row(Matrix<Scalar>(u.topRows(2 * red.p)), phi.cols()), red.p};
}

template <class Scalar>
std::ostream& operator<<(std::ostream& os, const TwoVarPolyMatrix<Scalar>& phi) {
    if (phi.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [key, b] : phi.blocks()) {
        os << (first ? "" : " + ") << "[";
        first = false;
        for (Index i = 0; i < b.rows(); ++i) {
            os << (i ? "; " : "");
            for (Index j = 0; j < b.cols(); ++j) os << (j ? ", " : "") << b(i, j);
        }
        os << "]";
        if (key.first) os << " zeta" << (key.first > 1 ? "^" + std::to_string(key.first) : "");
        if (key.second) os << " eta" << (key.second > 1 ? "^" + std::to_string(key.second) : "");
    }
    return os;
}

}  // namespace bforge

#endif
