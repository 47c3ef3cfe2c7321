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

#ifndef BFORGE_ERROR_HPP
#define BFORGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bforge {

enum class ErrorCode {
    all_zero,
    dimension_mismatch,
    not_symmetric,
    not_skew,
    not_divisible,
    odd_rank,
    skew_condition_failed,
    rank_condition_failed,
    not_skew_adjoint,
    symmetry_condition_failed,
    unbalanced_signature,
    not_abutting,
    parse_error,
    shape_error,
    unsolvable,
    non_unique_solution,
    none_found,
    internal,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

inline const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::all_zero: return "AllZero";
        case ErrorCode::dimension_mismatch: return "DimensionMismatch";
        case ErrorCode::not_symmetric: return "NotSymmetric";
        case ErrorCode::not_skew: return "NotSkew";
        case ErrorCode::not_divisible: return "NotDivisible";
        case ErrorCode::odd_rank: return "OddRank";
        case ErrorCode::skew_condition_failed: return "SkewConditionFailed";
        case ErrorCode::rank_condition_failed: return "RankConditionFailed";
        case ErrorCode::not_skew_adjoint: return "NotSkewAdjoint";
        case ErrorCode::symmetry_condition_failed: return "SymmetryConditionFailed";
        case ErrorCode::unbalanced_signature: return "UnbalancedSignature";
        case ErrorCode::not_abutting: return "NotAbutting";
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::shape_error: return "ShapeError";
        case ErrorCode::unsolvable: return "Unsolvable";
        case ErrorCode::non_unique_solution: return "NonUniqueSolution";
        case ErrorCode::none_found: return "NoneFound";
        case ErrorCode::internal: return "InternalError";
    }
    return "Unknown";
}

}  // namespace bforge

#endif
