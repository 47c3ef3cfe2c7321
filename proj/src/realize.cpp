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

#include <bforge/realize.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace bforge {

namespace {

std::set<Index> checked_swap(const std::vector<Index>& swap, Index m) {
    std::set<Index> out;
    for (Index k : swap) {
        if (k < 1 || k > m) throw Error(ErrorCode::dimension_mismatch, "swap index out of range 1.." + std::to_string(m));
        if (!out.insert(k).second) throw Error(ErrorCode::dimension_mismatch, "repeated swap index " + std::to_string(k));
    }
    return out;
}

std::string swap_label(const std::vector<Index>& swap) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < swap.size(); ++i) os << (i ? "," : "") << swap[i];
    return os.str() + "}";
}

// Rows of `first` with the rows in `swap` taken from `second` (optionally negated).
PortRows mix_rows(const RPolyMatrix& first, const RPolyMatrix& second, const std::set<Index>& swap, bool negate_swapped) {
    PortRows out{first, second};
    for (Index k : swap) {
        const Index i = k - 1;
        RPolyMatrix fr = first.block(i, 0, 1, first.cols()), sr = second.block(i, 0, 1, second.cols());
        for (Index j = 0; j < first.cols(); ++j) {
            out.u.set_entry(i, j, sr.entry(0, j));
            out.y.set_entry(i, j, negate_swapped ? -fr.entry(0, j) : fr.entry(0, j));
        }
    }
    return out;
}

// Solves X [Z; U](s) = R(s) for constant X, coefficient by coefficient.
struct Matched {
    SolveStatus status;
    RMatrix x;
    Index freedom = 0;
};

Matched match(const RPolyMatrix& zu, const RPolyMatrix& rhs) {
    const Index blocks = std::max({zu.length(), rhs.length(), Index(1)});
    const RMatrix lhs = coefficient_row(zu, blocks), right = coefficient_row(rhs, blocks);
    SolveResult<Rational> r = solve_linear<Rational>(lhs.transpose(), right.transpose());
    return {r.status, r.status == SolveStatus::unique ? RMatrix(r.solution.transpose()) : RMatrix(), r.free_dimensions};
}

RealizeOutcome realize_rows(RealizationKind kind, const RPolyMatrix& z, const RMatrix& sigma, const PortRows& rows,
                            std::vector<Index> swap) {
    const Index n = z.rows(), m = rows.u.rows();
    const RPolyMatrix zu = vstack(z, rows.u);
    RealizeOutcome out;
    Realization r;
    r.kind = kind;
    r.sigma = sigma;
    r.swap = std::move(swap);
    const std::string label = swap_label(r.swap);

    if (n > 0) {
        Matched ab = match(zu, shift(z));
        if (ab.status == SolveStatus::inconsistent) {
            out.witness = "swap " + label + ": no constant [A B] with s Z(s) = A Z(s) + B U(s)";
            return out;
        }
        if (ab.status == SolveStatus::underdetermined) {
            out.status = RealizeStatus::non_unique;
            out.freedom = ab.freedom;
            out.witness = "swap " + label + ": [A B] has " + std::to_string(ab.freedom) + " free directions per row";
            return out;
        }
        r.a = ab.x.leftCols(n);
        r.b = ab.x.rightCols(m);
    } else {
        r.a = RMatrix(0, 0);
        r.b = RMatrix(0, m);
    }

    Matched cd = match(zu, rows.y);
    if (cd.status == SolveStatus::inconsistent) {
        out.witness = "swap " + label + ": no constant [C D] with Y(s) = C Z(s) + D U(s)";
        return out;
    }
    if (cd.status == SolveStatus::underdetermined) {
        out.status = RealizeStatus::non_unique;
        out.freedom = cd.freedom;
        out.witness = "swap " + label + ": [C D] has " + std::to_string(cd.freedom) + " free directions per row";
        return out;
    }
    r.c = cd.x.leftCols(n);
    r.d = cd.x.rightCols(m);
    out.status = RealizeStatus::ok;
    out.realization = std::move(r);
    return out;
}

template <class Structure>
PartitionResult search(const Structure& s) {
    PartitionResult out;
    for (auto& candidate : swap_candidates(s.ports())) {
        RealizeOutcome r = realize(s, candidate);
        if (r.ok()) {
            out.swap = std::move(candidate);
            out.outcome = std::move(r);
            return out;
        }
        out.witnesses.push_back(r.witness);
    }
    return out;
}

}  // namespace

PortRows port_rows(const BoundaryStructure& s, const std::vector<Index>& swap) {
    return mix_rows(s.rep.n_f, s.rep.n_e, checked_swap(swap, s.ports()), false);
}

PortRows port_rows(const LagrangeBoundary& s, const std::vector<Index>& swap) {
    return mix_rows(s.rep.n_x, s.rep.n_e, checked_swap(swap, s.ports()), true);
}

RealizeOutcome realize(const BoundaryStructure& s, const std::vector<Index>& swap) {
    return realize_rows(RealizationKind::dirac, s.z, s.sigma, port_rows(s, swap), swap);
}

RealizeOutcome realize(const LagrangeBoundary& s, const std::vector<Index>& swap) {
    return realize_rows(RealizationKind::lagrange, s.w, symplectic_unit<Rational>(s.p), port_rows(s, swap), swap);
}

PartitionResult partition_search(const BoundaryStructure& s) { return search(s); }
PartitionResult partition_search(const LagrangeBoundary& s) { return search(s); }

bool StructureResiduals::passed() const {
    return is_exactly_zero(lyapunov) && is_exactly_zero(output) && is_exactly_zero(feedthrough) &&
           is_exactly_zero(interconnection);
}

StructureResiduals verify_realization_structure(const Realization& r) {
    StructureResiduals out;
    out.lyapunov = r.a.transpose() * r.sigma + r.sigma * r.a;
    out.output = r.b.transpose() * r.sigma - r.c;
    if (r.kind == RealizationKind::dirac) {
        out.feedthrough = r.d + r.d.transpose();
        const RMatrix j = r.sigma.rows() > 0 ? RMatrix(r.a * inverse(r.sigma)) : RMatrix(0, 0);
        out.interconnection = j + j.transpose();
    } else {
        out.feedthrough = r.d - r.d.transpose();
        out.interconnection = RMatrix(0, 0);
    }
    return out;
}

std::vector<std::vector<Index>> swap_candidates(Index m) {
    std::vector<std::vector<Index>> out;
    for (Index size = 0; size <= m; ++size) {
        std::vector<bool> pick(static_cast<std::size_t>(m), false);
        std::fill(pick.begin(), pick.begin() + size, true);
        do {
            std::vector<Index> subset;
            for (Index i = 0; i < m; ++i)
                if (pick[static_cast<std::size_t>(i)]) subset.push_back(i + 1);
            out.push_back(std::move(subset));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return out;
}

}  // namespace bforge
