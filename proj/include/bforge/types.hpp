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

#ifndef BFORGE_TYPES_HPP
#define BFORGE_TYPES_HPP

#include <bforge/poly.hpp>
#include <bforge/poly_matrix.hpp>
#include <bforge/two_var.hpp>

namespace bforge {

using RPoly = Poly<Rational>;
using RPolyMatrix = PolyMatrix<Rational>;
using RTwoVar = TwoVarPolyMatrix<Rational>;

/// Polynomial latent function l(z) on the closed interval [alpha, beta].
struct Trajectory {
    RPolyMatrix latent;  // dim x 1
    Rational alpha;
    Rational beta;
};

}  // namespace bforge

#endif
