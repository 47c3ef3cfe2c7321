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

#ifndef BFORGE_POLY_HPP
#define BFORGE_POLY_HPP

#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <type_traits>
#include <utility>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"

namespace bforge {

/*
   Univariate polynomial in s with coefficients in Scalar, coeffs()[k] multiplies s^k.
   Trailing zeros are never stored, so the zero polynomial has no coefficients.
*/
template <class Scalar>
class Poly {
   public:
    Poly() = default;
    Poly(const Scalar& c) : coeffs_{c} { trim(); }
    template <class T>
        requires std::is_arithmetic_v<T>
    Poly(T c) : Poly(Scalar(c)) {}
    Poly(std::initializer_list<Scalar> c) : coeffs_(c) { trim(); }
    explicit Poly(std::vector<Scalar> c) : coeffs_(std::move(c)) { trim(); }

    static Poly monomial(Index k, const Scalar& c = Scalar(1)) {
        std::vector<Scalar> v(static_cast<std::size_t>(k) + 1, Scalar(0));
        v.back() = c;
        return Poly(std::move(v));
    }

    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Degree degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<Index>(coeffs_.size()) - 1;
    }
    Index size() const noexcept { return static_cast<Index>(coeffs_.size()); }

    Scalar coeff(Index k) const {
        return k >= 0 && k < size() ? coeffs_[static_cast<std::size_t>(k)] : Scalar(0);
    }
    Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

    Scalar operator()(const Scalar& x) const {
        Scalar acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }
    Poly& operator*=(const Scalar& c) {
        for (auto& a : coeffs_) a *= c;
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
    friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
    template <class T>
        requires std::is_arithmetic_v<T>
    friend Poly operator*(T c, Poly a) {
        return a *= Scalar(c);
    }
    template <class T>
        requires std::is_arithmetic_v<T>
    friend Poly operator*(Poly a, T c) {
        return a *= Scalar(c);
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == Scalar(0)) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(out));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
    }

    std::vector<Scalar> coeffs_;
};

template <class Scalar>
Poly<Scalar> derivative(const Poly<Scalar>& p, Index order = 1) {
    if (order <= 0) return p;
    if (p.size() <= order) return Poly<Scalar>();
    std::vector<Scalar> out(static_cast<std::size_t>(p.size() - order));
    for (Index k = order; k < p.size(); ++k) {
        Scalar falling(1);
        for (Index j = 0; j < order; ++j) falling *= Scalar(k - j);
        out[static_cast<std::size_t>(k - order)] = falling * p.coeff(k);
    }
    return Poly<Scalar>(std::move(out));
}

/// Antiderivative with zero constant term.
template <class Scalar>
Poly<Scalar> antiderivative(const Poly<Scalar>& p) {
    if (p.is_zero()) return p;
    std::vector<Scalar> out(static_cast<std::size_t>(p.size()) + 1, Scalar(0));
    for (Index k = 0; k < p.size(); ++k) out[static_cast<std::size_t>(k) + 1] = p.coeff(k) / Scalar(k + 1);
    return Poly<Scalar>(std::move(out));
}

template <class Scalar>
Scalar definite_integral(const Poly<Scalar>& p, const Scalar& a, const Scalar& b) {
    Poly<Scalar> anti = antiderivative(p);
    return anti(b) - anti(a);
}

/// p(-s).
template <class Scalar>
Poly<Scalar> para_conjugate(const Poly<Scalar>& p) {
    std::vector<Scalar> out = p.coeffs();
    for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
    return Poly<Scalar>(std::move(out));
}

template <class Scalar>
struct PolyDivision {
    Poly<Scalar> quotient;
    Poly<Scalar> remainder;
};

template <class Scalar>
PolyDivision<Scalar> divmod(const Poly<Scalar>& a, const Poly<Scalar>& b) {
    if (b.is_zero()) throw Error(ErrorCode::all_zero, "polynomial division by zero");
    std::vector<Scalar> rem = a.coeffs();
    const Index db = *b.degree();
    if (a.size() <= db) return {Poly<Scalar>(), a};
    std::vector<Scalar> quot(static_cast<std::size_t>(a.size() - db), Scalar(0));
    const Scalar lead = b.leading();
    for (Index k = a.size() - 1; k >= db; --k) {
        Scalar c = rem[static_cast<std::size_t>(k)] / lead;
        quot[static_cast<std::size_t>(k - db)] = c;
        if (c == Scalar(0)) continue;
        for (Index j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeff(j);
    }
    return {Poly<Scalar>(std::move(quot)), Poly<Scalar>(std::move(rem))};
}

template <class Scalar>
Poly<Scalar> monic(const Poly<Scalar>& p) {
    if (p.is_zero()) return p;
    return p * (Scalar(1) / p.leading());
}

template <class Scalar>
Poly<Scalar> gcd(Poly<Scalar> a, Poly<Scalar> b) {
    while (!b.is_zero()) {
        Poly<Scalar> r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Monic gcd of a list; throws AllZero when every entry vanishes.
template <class Scalar>
Poly<Scalar> poly_gcd(std::span<const Poly<Scalar>> ps) {
    Poly<Scalar> g;
    for (const auto& p : ps) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? monic(p) : gcd(g, p);
        if (g.degree() == Index(0)) break;
    }
    if (g.is_zero()) throw Error(ErrorCode::all_zero, "gcd of a list of zero polynomials");
    return g;
}

template <class Scalar>
Poly<Scalar> poly_gcd(const std::vector<Poly<Scalar>>& ps) {
    return poly_gcd(std::span<const Poly<Scalar>>(ps));
}

/// Exact interpolation through (xs[i], ys[i]) with pairwise distinct xs.
template <class Scalar>
Poly<Scalar> interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
    // Newton divided differences, then expansion into the monomial basis.
    const std::size_t n = xs.size();
    std::vector<Scalar> dd = ys;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
            if (i == level) break;
        }
    Poly<Scalar> result;
    for (std::size_t i = n; i-- > 0;) {
        result = result * Poly<Scalar>{-xs[i], Scalar(1)} + Poly<Scalar>(dd[i]);
    }
    return result;
}

template <class Scalar>
std::string to_string(const Poly<Scalar>& p, const char* var = "s") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (Index k = p.size() - 1; k >= 0; --k) {
        Scalar c = p.coeff(k);
        if (c == Scalar(0)) continue;
        bool negative = c < Scalar(0);
        Scalar mag = negative ? Scalar(-c) : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (k == 0 || mag != Scalar(1)) {
            os << mag;
            if (k > 0) os << "*";
        }
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

template <class Scalar>
std::ostream& operator<<(std::ostream& os, const Poly<Scalar>& p) {
    return os << to_string(p);
}

}  // namespace bforge

#endif
