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

// Reports: a versioned JSON document and a plain-text rendering of the same content.

#ifndef BFORGE_REPORT_HPP
#define BFORGE_REPORT_HPP

#include <bforge/linalg.hpp>
#include <bforge/types.hpp>

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bforge {

inline constexpr const char* report_schema_version = "1.0.0";

/// Sign convention of the image representation relative to the transposed parametrization.
extern const char* const convention_note;

struct Verdict {
    std::string name;
    bool passed = false;
    std::string witness;
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct SplitSection {
    bool two_point = false;
    RMatrix sigma;  // the form that was split
    Index p = 0;
    Matrix<double> t;
    double residual = 0.0;
    double tolerance = 0.0;
    friend bool operator==(const SplitSection& a, const SplitSection& b);
};

struct RealizationSection {
    std::string kind;  // "dirac" or "lagrange"
    std::vector<Index> swap;
    RMatrix a, b, c, d, sigma;
    std::vector<Verdict> checks;
    friend bool operator==(const RealizationSection& x, const RealizationSection& y);
};

struct HarnessSummary {
    std::string check;
    std::string instance;
    Index trials = 0;
    Index failures = 0;
    std::string max_residual;  // exact rational, "0" when all vanish
    double max_split_error = 0.0;
    double elapsed_seconds = 0.0;
    friend bool operator==(const HarnessSummary&, const HarnessSummary&) = default;
};

struct Report {
    std::string schema_version = report_schema_version;
    std::string command;
    std::string kind;
    std::vector<Verdict> conditions;
    std::map<std::string, RPolyMatrix> polynomials;  // Z, W, Z_J, Z_G, V_G, N_f, N_e, ...
    std::map<std::string, RMatrix> matrices;         // Sigma, Sigma_J, Pi_G
    std::map<std::string, RTwoVar> forms;            // Pi, Theta, Pi_J
    std::map<std::string, Index> integers;           // n, p, ...
    std::optional<Inertia> inertia;
    std::optional<SplitSection> split;
    std::optional<RealizationSection> realization;
    std::vector<HarnessSummary> harness;
    std::vector<std::string> notes;
    std::string convention;
    int exit_status = 0;

    bool all_passed() const;
    friend bool operator==(const Report& a, const Report& b);
};

nlohmann::json to_json(const RTwoVar& phi);
RTwoVar two_var_from_json(const nlohmann::json& j, const std::string& path);

nlohmann::json to_json(const Report& r);
/// Throws ParseError with the field path.
Report report_from_json(const nlohmann::json& j);

std::string render_text(const Report& r);

}  // namespace bforge

#endif
