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

#ifndef BFORGE_RANDOM_HPP
#define BFORGE_RANDOM_HPP

#include <bforge/types.hpp>

#include <cstdint>
#include <random>

namespace bforge {

/// Deterministic small rationals: numerators in [-9, 9], denominators in [1, 9].
class RationalSource {
   public:
    explicit RationalSource(std::uint64_t seed) : rng_(seed) {}

    Rational next() {
        std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
        const int n = num(rng_);
        return Rational(n, den(rng_));
    }
    Rational nonzero() {
        for (;;)
            if (Rational r = next(); r != 0) return r;
    }
    RPoly poly(Index degree) {
        std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
        for (auto& x : c) x = next();
        return RPoly(std::move(c));
    }
    RPolyMatrix vector(Index dim, Index degree) {
        std::vector<RPoly> e;
        for (Index i = 0; i < dim; ++i) e.push_back(poly(degree));
        return RPolyMatrix::column(e);
    }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    std::mt19937_64& engine() noexcept { return rng_; }

   private:
    std::mt19937_64 rng_;
};

}  // namespace bforge

#endif
