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

#ifndef BFORGE_SCALAR_HPP
#define BFORGE_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bforge {

using Index = Eigen::Index;

/// Exact rational scalar. GMP keeps every value reduced with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RMatrix = Matrix<Rational>;
using RVector = Vector<Rational>;

/// Degree of a polynomial; std::nullopt stands for minus infinity (the zero polynomial).
using Degree = std::optional<Index>;

template <class Derived>
bool is_exactly_zero(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != Scalar(0)) return false;
    return true;
}

template <class A, class B>
bool exactly_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

template <class Scalar>
Matrix<Scalar> identity(Index n) {
    return Matrix<Scalar>::Identity(n, n);
}

template <class Scalar>
Matrix<Scalar> zeros(Index rows, Index cols) {
    return Matrix<Scalar>::Zero(rows, cols);
}

/// Parses "p", "-p" or "p/q" with decimal integers. Throws std::invalid_argument.
inline Rational parse_rational(std::string_view text) {
    auto digits = [](std::string_view s) {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start) return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    std::size_t slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!digits(num)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Integer p(std::string(num[0] == '+' ? num.substr(1) : num));
    if (slash == std::string_view::npos) return Rational(p);
    std::string_view den = text.substr(slash + 1);
    if (!digits(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Integer q{std::string(den)};
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
}

inline std::string to_string(const Rational& r) {
    return r.str();
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

inline Matrix<double> to_double(const RMatrix& m) {
    Matrix<double> out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
    return out;
}

}  // namespace bforge

#endif
