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

#include <bforge/problem.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace bforge {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
    throw Error(ErrorCode::parse_error, path + ": " + what);
}

[[noreturn]] void shape_fail(const std::string& path, const std::string& what) {
    throw Error(ErrorCode::shape_error, path + ": " + what);
}

std::string index_path(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::string shape(const RPolyMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

// Line and column (1-based) of a byte offset, for syntax errors.
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < std::min(offset, text.size()); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

const std::map<ProblemKind, std::vector<std::string>>& roles() {
    static const std::map<ProblemKind, std::vector<std::string>> table{
        {ProblemKind::dirac, {"F", "E"}},
        {ProblemKind::skew_adjoint, {"J"}},
        {ProblemKind::constrained, {"J", "G"}},
        {ProblemKind::lagrange, {"P", "S"}},
    };
    return table;
}

void require_square(const ProblemFile& p, const std::string& role) {
    const RPolyMatrix& m = p.matrix(role);
    if (m.rows() != m.cols()) shape_fail(role, "must be square, got " + shape(m));
}

void require_same(const ProblemFile& p, const std::string& a, const std::string& b) {
    if (p.matrix(a).rows() != p.matrix(b).rows())
        shape_fail(b, "must match " + a + " (" + shape(p.matrix(a)) + "), got " + shape(p.matrix(b)));
}

Index index_setting(const json& j, const std::string& path, Index lo) {
    if (!j.is_number_integer() || j.get<long long>() < lo)
        parse_fail(path, "expected an integer >= " + std::to_string(lo));
    return static_cast<Index>(j.get<long long>());
}

Settings parse_settings(const json& j) {
    if (!j.is_object()) parse_fail("settings", "expected an object");
    Settings s;
    for (const auto& [key, value] : j.items()) {
        const std::string path = "settings." + key;
        if (key == "interval") {
            if (!value.is_array() || value.size() != 2) parse_fail(path, "expected [alpha, beta]");
            Rational a = rational_from_json(value[0], index_path(path, 0));
            Rational b = rational_from_json(value[1], index_path(path, 1));
            if (!(a < b)) parse_fail(path, "alpha must be less than beta");
            s.interval = std::make_pair(a, b);
        } else if (key == "degree") {
            s.degree = index_setting(value, path, 0);
        } else if (key == "trials") {
            s.trials = index_setting(value, path, 1);
        } else if (key == "seed") {
            if (!value.is_number_unsigned()) parse_fail(path, "expected a non-negative integer");
            s.seed = value.get<std::uint64_t>();
        } else if (key == "tolerance") {
            if (!value.is_number() || value.get<double>() <= 0) parse_fail(path, "expected a positive number");
            s.tolerance = value.get<double>();
        } else {
            parse_fail(path, "unknown setting");
        }
    }
    return s;
}

}  // namespace

const char* to_string(ProblemKind kind) noexcept {
    switch (kind) {
        case ProblemKind::dirac: return "dirac";
        case ProblemKind::skew_adjoint: return "skew_adjoint";
        case ProblemKind::constrained: return "constrained";
        case ProblemKind::lagrange: return "lagrange";
    }
    return "unknown";
}

std::optional<ProblemKind> problem_kind_from_string(std::string_view name) {
    for (auto kind : {ProblemKind::dirac, ProblemKind::skew_adjoint, ProblemKind::constrained, ProblemKind::lagrange})
        if (name == to_string(kind)) return kind;
    return std::nullopt;
}

const RPolyMatrix& ProblemFile::matrix(const std::string& role) const {
    auto it = matrices.find(role);
    if (it == matrices.end()) shape_fail(role, "required by kind " + std::string(to_string(kind)));
    return it->second;
}

Rational rational_from_json(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) parse_fail(path, "expected a rational string such as \"-3/4\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        parse_fail(path, e.what());
    }
}

RPoly poly_from_json(const json& j, const std::string& path) {
    if (!j.is_array()) parse_fail(path, "expected an array of coefficients indexed by power of s");
    std::vector<Rational> c;
    c.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) c.push_back(rational_from_json(j[k], index_path(path, k)));
    return RPoly(std::move(c));
}

RPolyMatrix poly_matrix_from_json(const json& j, const std::string& path, Index cols) {
    if (!j.is_array()) parse_fail(path, "expected an array of rows");
    std::vector<std::vector<RPoly>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string rp = index_path(path, i);
        if (!j[i].is_array()) parse_fail(rp, "expected a row (array of polynomials)");
        if (i > 0 && j[i].size() != j[0].size())
            shape_fail(rp, "row has " + std::to_string(j[i].size()) + " entries, expected " + std::to_string(j[0].size()));
        std::vector<RPoly> row;
        for (std::size_t k = 0; k < j[i].size(); ++k) row.push_back(poly_from_json(j[i][k], index_path(rp, k)));
        rows.push_back(std::move(row));
    }
    return RPolyMatrix::from_entries(rows, cols);
}

RMatrix matrix_from_json(const json& j, const std::string& path, Index cols) {
    if (!j.is_array()) parse_fail(path, "expected an array of rows");
    const Index r = static_cast<Index>(j.size());
    const Index c = r > 0 && j[0].is_array() ? static_cast<Index>(j[0].size()) : cols;
    RMatrix out(r, c);
    for (Index i = 0; i < r; ++i) {
        const auto& row = j[static_cast<std::size_t>(i)];
        const std::string rp = index_path(path, static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<Index>(row.size()) != c) shape_fail(rp, "expected " + std::to_string(c) + " entries");
        for (Index k = 0; k < c; ++k)
            out(i, k) = rational_from_json(row[static_cast<std::size_t>(k)], index_path(rp, static_cast<std::size_t>(k)));
    }
    return out;
}

json to_json(const RPoly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

json to_json(const RPolyMatrix& m) {
    json out = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m.entry(i, k)));
        out.push_back(std::move(row));
    }
    return out;
}

json to_json(const RMatrix& m) {
    json out = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
        out.push_back(std::move(row));
    }
    return out;
}

json to_json(const ProblemFile& problem) {
    json out{{"kind", to_string(problem.kind)}};
    for (const auto& [role, m] : problem.matrices) out[role] = to_json(m);
    json settings = json::object();
    const Settings& s = problem.settings;
    if (s.interval) settings["interval"] = {to_string(s.interval->first), to_string(s.interval->second)};
    if (s.degree) settings["degree"] = *s.degree;
    if (s.trials) settings["trials"] = *s.trials;
    if (s.seed) settings["seed"] = *s.seed;
    if (s.tolerance) settings["tolerance"] = *s.tolerance;
    if (!settings.empty()) out["settings"] = std::move(settings);
    return out;
}

ProblemFile parse_problem_text(std::string_view text, const std::string& source) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        std::ostringstream os;
        os << source << ":" << line << ":" << col << ": " << e.what();
        throw Error(ErrorCode::parse_error, os.str());
    }
    if (!doc.is_object()) parse_fail(source, "expected a JSON object at top level");
    if (!doc.contains("kind") || !doc["kind"].is_string()) parse_fail("kind", "missing or not a string");

    ProblemFile out;
    const std::string kind_name = doc["kind"].get<std::string>();
    auto kind = problem_kind_from_string(kind_name);
    if (!kind) parse_fail("kind", "unknown kind \"" + kind_name + "\" (dirac, skew_adjoint, constrained, lagrange)");
    out.kind = *kind;

    const auto& wanted = roles().at(out.kind);
    const std::set<std::string> allowed(wanted.begin(), wanted.end());
    for (const auto& [key, value] : doc.items()) {
        if (key == "kind") continue;
        if (key == "settings") {
            out.settings = parse_settings(value);
            continue;
        }
        if (!allowed.count(key)) parse_fail(key, "field not used by kind " + kind_name);
    }
    // G may be absent (no constraints) and needs J's width when it has no rows.
    for (const auto& role : wanted) {
        if (!doc.contains(role)) {
            if (role == "G") continue;
            shape_fail(role, "required by kind " + kind_name);
        }
        const Index cols = role == "G" && out.matrices.count("J") ? out.matrices.at("J").cols() : 0;
        out.matrices.emplace(role, poly_matrix_from_json(doc[role], role, cols));
    }

    switch (out.kind) {
        case ProblemKind::dirac:
            require_square(out, "F");
            require_square(out, "E");
            require_same(out, "F", "E");
            break;
        case ProblemKind::skew_adjoint: require_square(out, "J"); break;
        case ProblemKind::constrained: {
            require_square(out, "J");
            const Index m = out.matrix("J").cols();
            if (!out.matrices.count("G")) out.matrices.emplace("G", RPolyMatrix(0, m));
            if (out.matrix("G").cols() != m)
                shape_fail("G", "must have " + std::to_string(m) + " columns like J, got " + shape(out.matrix("G")));
            break;
        }
        case ProblemKind::lagrange:
            require_square(out, "P");
            require_square(out, "S");
            require_same(out, "P", "S");
            break;
    }
    return out;
}

ProblemFile parse_problem(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::parse_error, path.string() + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str(), path.string());
}

}  // namespace bforge
