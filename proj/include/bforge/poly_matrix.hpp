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

#ifndef BFORGE_POLY_MATRIX_HPP
#define BFORGE_POLY_MATRIX_HPP

#include <algorithm>
#include <ostream>
#include <vector>

#include "error.hpp"
#include "poly.hpp"
#include "scalar.hpp"

namespace bforge {

/*
   Polynomial matrix P(s) = sum_k P_k s^k stored as its list of constant coefficient
   matrices. The same type carries polynomial vectors (cols() == 1), e.g. latent
   trajectories l(z) whose coefficient k multiplies z^k. Trailing zero coefficients
   are dropped, so coeffs().empty() iff the matrix is zero.
*/
template <class Scalar>
class PolyMatrix {
   public:
    using Coefficient = Matrix<Scalar>;

    PolyMatrix() : PolyMatrix(0, 0) {}
    PolyMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {}
    PolyMatrix(Index rows, Index cols, std::vector<Coefficient> coeffs)
        : rows_(rows), cols_(cols), coeffs_(std::move(coeffs)) {
        for (const auto& c : coeffs_)
            if (c.rows() != rows_ || c.cols() != cols_)
                throw Error(ErrorCode::dimension_mismatch, "coefficient shape differs from polynomial matrix shape");
        trim();
    }
    explicit PolyMatrix(const Coefficient& constant)
        : PolyMatrix(constant.rows(), constant.cols(), std::vector<Coefficient>{constant}) {}

    static PolyMatrix identity(Index n) { return PolyMatrix(Coefficient::Identity(n, n)); }

    /// Row-major nested entries; `cols` is used only when there are no rows.
    static PolyMatrix from_entries(const std::vector<std::vector<Poly<Scalar>>>& entries, Index cols = 0) {
        const Index r = static_cast<Index>(entries.size());
        const Index c = r > 0 ? static_cast<Index>(entries[0].size()) : cols;
        PolyMatrix out(r, c);
        for (Index i = 0; i < r; ++i) {
            if (static_cast<Index>(entries[static_cast<std::size_t>(i)].size()) != c)
                throw Error(ErrorCode::dimension_mismatch, "ragged polynomial matrix rows");
            for (Index j = 0; j < c; ++j) out.set_entry(i, j, entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
        return out;
    }

    static PolyMatrix column(const std::vector<Poly<Scalar>>& entries) {
        PolyMatrix out(static_cast<Index>(entries.size()), 1);
        for (std::size_t i = 0; i < entries.size(); ++i) out.set_entry(static_cast<Index>(i), 0, entries[i]);
        return out;
    }

    Index rows() const noexcept { return rows_; }
    Index cols() const noexcept { return cols_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Degree degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<Index>(coeffs_.size()) - 1;
    }
    /// Number of stored coefficients, i.e. degree + 1 (0 for the zero matrix).
    Index length() const noexcept { return static_cast<Index>(coeffs_.size()); }

    const std::vector<Coefficient>& coeffs() const noexcept { return coeffs_; }
    Coefficient coeff(Index k) const {
        if (k >= 0 && k < length()) return coeffs_[static_cast<std::size_t>(k)];
        return Coefficient::Zero(rows_, cols_);
    }

    Poly<Scalar> entry(Index i, Index j) const {
        std::vector<Scalar> c(coeffs_.size());
        for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] = coeffs_[k](i, j);
        return Poly<Scalar>(std::move(c));
    }

    void set_entry(Index i, Index j, const Poly<Scalar>& p) {
        if (p.size() > length()) coeffs_.resize(static_cast<std::size_t>(p.size()), Coefficient::Zero(rows_, cols_));
        for (Index k = 0; k < length(); ++k) coeffs_[static_cast<std::size_t>(k)](i, j) = p.coeff(k);
        trim();
    }

    Coefficient operator()(const Scalar& s) const {
        Coefficient acc = Coefficient::Zero(rows_, cols_);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (acc * s + *it).eval();
        return acc;
    }

    PolyMatrix transpose() const {
        std::vector<Coefficient> c;
        c.reserve(coeffs_.size());
        for (const auto& m : coeffs_) c.push_back(m.transpose());
        return PolyMatrix(cols_, rows_, std::move(c));
    }

    PolyMatrix block(Index r0, Index c0, Index nr, Index nc) const {
        std::vector<Coefficient> c;
        c.reserve(coeffs_.size());
        for (const auto& m : coeffs_) c.push_back(m.block(r0, c0, nr, nc));
        return PolyMatrix(nr, nc, std::move(c));
    }

    PolyMatrix select_rows(const std::vector<Index>& idx) const {
        std::vector<Coefficient> c;
        c.reserve(coeffs_.size());
        for (const auto& m : coeffs_) {
            Coefficient s(static_cast<Index>(idx.size()), cols_);
            for (std::size_t r = 0; r < idx.size(); ++r) s.row(static_cast<Index>(r)) = m.row(idx[r]);
            c.push_back(std::move(s));
        }
        return PolyMatrix(static_cast<Index>(idx.size()), cols_, std::move(c));
    }

    PolyMatrix select_cols(const std::vector<Index>& idx) const { return transpose().select_rows(idx).transpose(); }

    PolyMatrix& operator+=(const PolyMatrix& o) {
        check_same_shape(o);
        if (o.length() > length()) coeffs_.resize(o.coeffs_.size(), Coefficient::Zero(rows_, cols_));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    PolyMatrix& operator-=(const PolyMatrix& o) {
        check_same_shape(o);
        if (o.length() > length()) coeffs_.resize(o.coeffs_.size(), Coefficient::Zero(rows_, cols_));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }
    PolyMatrix& operator*=(const Scalar& c) {
        for (auto& m : coeffs_) m *= c;
        trim();
        return *this;
    }

    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator-(PolyMatrix a) {
        for (auto& m : a.coeffs_) m = -m;
        return a;
    }
    friend PolyMatrix operator*(PolyMatrix a, const Scalar& c) { return a *= c; }
    friend PolyMatrix operator*(const Scalar& c, PolyMatrix a) { return a *= c; }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorCode::dimension_mismatch, "polynomial matrix product shape mismatch");
        if (a.is_zero() || b.is_zero()) return PolyMatrix(a.rows_, b.cols_);
        std::vector<Coefficient> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coefficient::Zero(a.rows_, b.cols_));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return PolyMatrix(a.rows_, b.cols_, std::move(out));
    }
    /// Constant matrix on the left.
    friend PolyMatrix operator*(const Coefficient& a, const PolyMatrix& b) {
        if (a.cols() != b.rows_) throw Error(ErrorCode::dimension_mismatch, "matrix times polynomial matrix shape mismatch");
        std::vector<Coefficient> out;
        out.reserve(b.coeffs_.size());
        for (const auto& m : b.coeffs_) out.push_back(a * m);
        return PolyMatrix(a.rows(), b.cols_, std::move(out));
    }
    friend PolyMatrix operator*(const PolyMatrix& a, const Coefficient& b) {
        if (a.cols_ != b.rows()) throw Error(ErrorCode::dimension_mismatch, "polynomial matrix times matrix shape mismatch");
        std::vector<Coefficient> out;
        out.reserve(a.coeffs_.size());
        for (const auto& m : a.coeffs_) out.push_back(m * b);
        return PolyMatrix(a.rows_, b.cols(), std::move(out));
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.coeffs_.size() != b.coeffs_.size()) return false;
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
            if (!exactly_equal(a.coeffs_[k], b.coeffs_[k])) return false;
        return true;
    }

   private:
    void check_same_shape(const PolyMatrix& o) const {
        if (o.rows_ != rows_ || o.cols_ != cols_)
            throw Error(ErrorCode::dimension_mismatch, "polynomial matrix sum shape mismatch");
    }
    void trim() {
        while (!coeffs_.empty() && is_exactly_zero(coeffs_.back())) coeffs_.pop_back();
    }

    Index rows_;
    Index cols_;
    std::vector<Coefficient> coeffs_;
};

/// P(-s): coefficient k picks up (-1)^k.
template <class Scalar>
PolyMatrix<Scalar> para_conjugate(const PolyMatrix<Scalar>& p) {
    std::vector<typename PolyMatrix<Scalar>::Coefficient> c = p.coeffs();
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return PolyMatrix<Scalar>(p.rows(), p.cols(), std::move(c));
}

/// s * P(s).
template <class Scalar>
PolyMatrix<Scalar> shift(const PolyMatrix<Scalar>& p) {
    if (p.is_zero()) return p;
    std::vector<typename PolyMatrix<Scalar>::Coefficient> c;
    c.reserve(p.coeffs().size() + 1);
    c.push_back(Matrix<Scalar>::Zero(p.rows(), p.cols()));
    for (const auto& m : p.coeffs()) c.push_back(m);
    return PolyMatrix<Scalar>(p.rows(), p.cols(), std::move(c));
}

/// Entrywise d/dz when the indeterminate is read as the spatial variable z.
template <class Scalar>
PolyMatrix<Scalar> derivative(const PolyMatrix<Scalar>& p, Index order = 1) {
    if (order <= 0) return p;
    if (p.length() <= order) return PolyMatrix<Scalar>(p.rows(), p.cols());
    std::vector<typename PolyMatrix<Scalar>::Coefficient> c;
    c.reserve(static_cast<std::size_t>(p.length() - order));
    for (Index k = order; k < p.length(); ++k) {
        Scalar falling(1);
        for (Index j = 0; j < order; ++j) falling *= Scalar(k - j);
        c.push_back(p.coeffs()[static_cast<std::size_t>(k)] * falling);
    }
    return PolyMatrix<Scalar>(p.rows(), p.cols(), std::move(c));
}

/// Applies the differential operator op(d/dz) to the polynomial function v(z).
template <class Scalar>
PolyMatrix<Scalar> apply(const PolyMatrix<Scalar>& op, const PolyMatrix<Scalar>& v) {
    if (op.cols() != v.rows()) throw Error(ErrorCode::dimension_mismatch, "operator and function dimensions differ");
    PolyMatrix<Scalar> out(op.rows(), v.cols());
    PolyMatrix<Scalar> dv = v;
    for (Index k = 0; k < op.length() && !dv.is_zero(); ++k) {
        out += op.coeffs()[static_cast<std::size_t>(k)] * dv;
        dv = derivative(dv);
    }
    return out;
}

template <class Scalar>
PolyMatrix<Scalar> vstack(const PolyMatrix<Scalar>& a, const PolyMatrix<Scalar>& b) {
    if (a.cols() != b.cols()) throw Error(ErrorCode::dimension_mismatch, "vstack column mismatch");
    const Index n = std::max(a.length(), b.length());
    std::vector<typename PolyMatrix<Scalar>::Coefficient> c;
    c.reserve(static_cast<std::size_t>(n));
    for (Index k = 0; k < n; ++k) {
        Matrix<Scalar> m(a.rows() + b.rows(), a.cols());
        m << a.coeff(k), b.coeff(k);
        c.push_back(std::move(m));
    }
    return PolyMatrix<Scalar>(a.rows() + b.rows(), a.cols(), std::move(c));
}

template <class Scalar>
PolyMatrix<Scalar> hstack(const PolyMatrix<Scalar>& a, const PolyMatrix<Scalar>& b) {
    return vstack(a.transpose(), b.transpose()).transpose();
}

/// Row block [P_0 P_1 ... P_{blocks-1}] of size rows x (blocks * cols).
template <class Scalar>
Matrix<Scalar> coefficient_row(const PolyMatrix<Scalar>& p, Index blocks) {
    Matrix<Scalar> out = Matrix<Scalar>::Zero(p.rows(), blocks * p.cols());
    for (Index k = 0; k < std::min(blocks, p.length()); ++k)
        out.block(0, k * p.cols(), p.rows(), p.cols()) = p.coeffs()[static_cast<std::size_t>(k)];
    return out;
}

/// Inverse of coefficient_row for a given block width.
template <class Scalar>
PolyMatrix<Scalar> from_coefficient_row(const Matrix<Scalar>& row, Index cols) {
    const Index blocks = cols > 0 ? row.cols() / cols : 0;
    std::vector<Matrix<Scalar>> c;
    c.reserve(static_cast<std::size_t>(blocks));
    for (Index k = 0; k < blocks; ++k) c.push_back(row.block(0, k * cols, row.rows(), cols));
    return PolyMatrix<Scalar>(row.rows(), cols, std::move(c));
}

/// v^T w for polynomial column vectors of equal length.
template <class Scalar>
Poly<Scalar> dot(const PolyMatrix<Scalar>& v, const PolyMatrix<Scalar>& w) {
    if (v.cols() != 1 || w.cols() != 1 || v.rows() != w.rows())
        throw Error(ErrorCode::dimension_mismatch, "dot product of mismatched polynomial vectors");
    if (v.rows() == 0) return Poly<Scalar>();
    return (v.transpose() * w).entry(0, 0);
}

template <class Scalar>
std::ostream& operator<<(std::ostream& os, const PolyMatrix<Scalar>& p) {
    os << "[";
    for (Index i = 0; i < p.rows(); ++i) {
        os << (i ? "; " : "");
        for (Index j = 0; j < p.cols(); ++j) os << (j ? ", " : "") << to_string(p.entry(i, j));
    }
    return os << "]";
}

}  // namespace bforge

#endif
