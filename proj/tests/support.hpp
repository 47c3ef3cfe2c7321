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

// Independent oracles and generators shared by the test binaries. Nothing here calls the
// congruence or factorization routines under test.

#ifndef BFORGE_TESTS_SUPPORT_HPP
#define BFORGE_TESTS_SUPPORT_HPP

#include <bforge/linalg.hpp>
#include <bforge/poly.hpp>
#include <bforge/poly_matrix.hpp>
#include <bforge/two_var.hpp>
#include <bforge/types.hpp>

#include <random>
#include <vector>

namespace bforge::test {

inline RPoly s() { return RPoly::monomial(1); }
inline Rational q(long n, long d = 1) { return Rational(n, d); }

inline RMatrix mat(std::initializer_list<std::initializer_list<Rational>> rows) {
    RMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (const auto& r : rows) {
        Index j = 0;
        for (const auto& v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

inline RPolyMatrix pmat(std::initializer_list<std::initializer_list<RPoly>> rows) {
    std::vector<std::vector<RPoly>> e;
    for (const auto& r : rows) e.emplace_back(r);
    return RPolyMatrix::from_entries(e);
}

inline RPolyMatrix pvec(std::initializer_list<RPoly> entries) { return RPolyMatrix::column(entries); }

/// Characteristic polynomial det(x I - S) by Faddeev-LeVerrier (exact over Q).
inline RPoly charpoly(const RMatrix& a) {
    const Index n = a.rows();
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = 1;
    RMatrix m = RMatrix::Zero(n, n);
    for (Index k = 1; k <= n; ++k) {
        m = (a * m + c[static_cast<std::size_t>(n - k + 1)] * identity<Rational>(n)).eval();
        c[static_cast<std::size_t>(n - k)] = -Rational((a * m).trace()) / Rational(k);
    }
    return RPoly(c);
}

/// Inertia of a symmetric rational matrix from the signs of its characteristic polynomial
/// coefficients. Descartes' rule is exact here because all roots are real.
inline Inertia charpoly_inertia(const RMatrix& a) {
    RPoly p = charpoly(a);
    Index zeros = 0;
    while (p.coeff(zeros) == 0) ++zeros;
    auto sign_changes = [](const RPoly& poly) {
        Index changes = 0;
        int last = 0;
        for (const auto& c : poly.coeffs()) {
            int sgn = c > 0 ? 1 : (c < 0 ? -1 : 0);
            if (sgn == 0) continue;
            if (last != 0 && sgn != last) ++changes;
            last = sgn;
        }
        return changes;
    };
    Inertia in;
    in.zero = zeros;
    in.positive = sign_changes(p);
    in.negative = sign_changes(para_conjugate(p));
    return in;
}

/// Brute-force rank by cofactor-free elimination with full pivot search (a second route).
inline Index brute_rank(RMatrix m) {
    Index r = 0;
    for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
        Index best = -1;
        for (Index i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) best = i;  // last nonzero, unlike rref
        if (best < 0) continue;
        m.row(best).swap(m.row(r));
        for (Index i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) / m(r, c);
            m.row(i) -= f * m.row(r);
        }
        ++r;
    }
    return r;
}

class Gen {
   public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    Rational small(int lo = -9, int hi = 9, int den_hi = 9) {
        std::uniform_int_distribution<int> n(lo, hi), d(1, den_hi);
        return Rational(n(rng_), d(rng_));
    }
    Rational nonzero() {
        for (;;) {
            Rational r = small();
            if (r != 0) return r;
        }
    }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    RPoly poly(Index degree) {
        std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
        for (auto& x : c) x = small();
        return RPoly(std::move(c));
    }
    RPolyMatrix polyvec(Index n, Index degree) {
        std::vector<RPoly> e;
        for (Index i = 0; i < n; ++i) e.push_back(poly(degree));
        return RPolyMatrix::column(e);
    }
    RPolyMatrix pmatrix(Index r, Index c, Index degree) {
        std::vector<std::vector<RPoly>> e(static_cast<std::size_t>(r));
        for (auto& row : e)
            for (Index j = 0; j < c; ++j) row.push_back(poly(integer(0, static_cast<int>(degree))));
        return RPolyMatrix::from_entries(e, c);
    }
    RMatrix matrix(Index r, Index c) {
        RMatrix m(r, c);
        for (Index i = 0; i < r; ++i)
            for (Index j = 0; j < c; ++j) m(i, j) = small();
        return m;
    }
    RMatrix invertible(Index n) {
        for (;;) {
            RMatrix m = matrix(n, n);
            if (brute_rank(m) == n) return m;
        }
    }
    RTwoVar twovar(Index p, Index qdim, Index max_power, double density = 0.5) {
        RTwoVar out(p, qdim);
        std::bernoulli_distribution keep(density);
        for (Index k = 0; k <= max_power; ++k)
            for (Index l = 0; l <= max_power; ++l)
                if (keep(rng_)) out.add(k, l, matrix(p, qdim));
        return out;
    }
    std::mt19937_64& engine() { return rng_; }

   private:
    std::mt19937_64 rng_;
};

}  // namespace bforge::test

#endif
