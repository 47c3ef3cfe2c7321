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

// State realizations of the boundary vector by exact coefficient matching.

#ifndef BFORGE_REALIZE_HPP
#define BFORGE_REALIZE_HPP

#include <bforge/dirac.hpp>
#include <bforge/lagrange.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bforge {

enum class RealizationKind { dirac, lagrange };

/*
   d/dz b = A b + B u, y = C b + D u with b = Z(d/dz) l. Ports listed in `swap` (1-based)
   exchange roles. Dirac: u = f, y = e; a swapped port takes u_k = e_k, y_k = f_k.
   Lagrange: u = x, y = e; a swapped port takes u_k = e_k, y_k = -x_k.
*/
struct Realization {
    RealizationKind kind = RealizationKind::dirac;
    RMatrix a, b, c, d;
    RMatrix sigma;  // Sigma for Dirac, J_p for Lagrange
    std::vector<Index> swap;
};

enum class RealizeStatus { ok, unsolvable, non_unique };

struct RealizeOutcome {
    RealizeStatus status = RealizeStatus::unsolvable;
    std::optional<Realization> realization;
    std::string witness;  // why the matching failed
    Index freedom = 0;    // dimension of the solution family when non-unique
    bool ok() const noexcept { return status == RealizeStatus::ok; }
};

/// Input rows U(s) and output rows Y(s) of the image representation for a swap set.
struct PortRows {
    RPolyMatrix u;
    RPolyMatrix y;
};

PortRows port_rows(const BoundaryStructure& s, const std::vector<Index>& swap);
PortRows port_rows(const LagrangeBoundary& s, const std::vector<Index>& swap);

/// Throws DimensionMismatch for out-of-range or repeated swap indices.
RealizeOutcome realize(const BoundaryStructure& s, const std::vector<Index>& swap = {});
RealizeOutcome realize(const LagrangeBoundary& s, const std::vector<Index>& swap = {});

struct PartitionResult {
    std::optional<std::vector<Index>> swap;
    RealizeOutcome outcome;              // of the chosen subset
    std::vector<std::string> witnesses;  // one per rejected subset, in search order
    bool found() const noexcept { return swap.has_value(); }
};

/// Smallest swap set, ties broken lexicographically, giving a unique realization.
PartitionResult partition_search(const BoundaryStructure& s);
PartitionResult partition_search(const LagrangeBoundary& s);

/// Exact residuals of the structure identities; all zero for a lossless realization.
struct StructureResiduals {
    RMatrix lyapunov;     // A^T Sigma + Sigma A
    RMatrix output;       // B^T Sigma - C
    RMatrix feedthrough;  // D + D^T (Dirac) or D - D^T (Lagrange)
    RMatrix interconnection;  // J + J^T with J = A Sigma^{-1}, Dirac only
    bool passed() const;
};

StructureResiduals verify_realization_structure(const Realization& r);

/// All subsets of {1..m} by size, then lexicographically.
std::vector<std::vector<Index>> swap_candidates(Index m);

}  // namespace bforge

#endif
