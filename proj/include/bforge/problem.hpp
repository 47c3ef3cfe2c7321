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

// Problem files: JSON with polynomial entries as arrays of rational strings indexed by power of s.
//
//   {"kind": "skew_adjoint", "J": [[["0"], ["0", "1"]], [["0", "1"], ["0"]]],
//    "settings": {"interval": ["0", "1"], "degree": 6, "trials": 100, "seed": 1, "tolerance": 1e-9}}

#ifndef BFORGE_PROBLEM_HPP
#define BFORGE_PROBLEM_HPP

#include <bforge/types.hpp>

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace bforge {

enum class ProblemKind { dirac, skew_adjoint, constrained, lagrange };

const char* to_string(ProblemKind kind) noexcept;
std::optional<ProblemKind> problem_kind_from_string(std::string_view name);

struct Settings {
    std::optional<std::pair<Rational, Rational>> interval;
    std::optional<Index> degree;
    std::optional<Index> trials;
    std::optional<std::uint64_t> seed;
    std::optional<double> tolerance;
};

struct ProblemFile {
    ProblemKind kind = ProblemKind::dirac;
    std::map<std::string, RPolyMatrix> matrices;  // F, E, J, G, P, S as the kind requires
    Settings settings;

    /// Throws ShapeError naming the missing role.
    const RPolyMatrix& matrix(const std::string& role) const;
};

/// Throws ParseError (syntax, bad rationals, unknown fields) or ShapeError, with the field path.
ProblemFile parse_problem_text(std::string_view text, const std::string& source = "<input>");
ProblemFile parse_problem(const std::filesystem::path& path);

nlohmann::json to_json(const RPoly& p);
nlohmann::json to_json(const RPolyMatrix& m);
nlohmann::json to_json(const RMatrix& m);
nlohmann::json to_json(const ProblemFile& problem);

/// `path` prefixes error messages; `cols` fixes the width of a matrix with no rows.
RPoly poly_from_json(const nlohmann::json& j, const std::string& path);
RPolyMatrix poly_matrix_from_json(const nlohmann::json& j, const std::string& path, Index cols = 0);
RMatrix matrix_from_json(const nlohmann::json& j, const std::string& path, Index cols = 0);
Rational rational_from_json(const nlohmann::json& j, const std::string& path);

}  // namespace bforge

#endif
