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

#include <bforge/report.hpp>

#include <bforge/dirac.hpp>
#include <bforge/problem.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace bforge {

using nlohmann::json;

const char* const convention_note =
    "Solutions of F(d/dz) f + E(d/dz) e = 0 are parametrized as f = E^T(-d/dz) l, e = F^T(-d/dz) l, the exact "
    "annihilator of [F E]. With the transposed parametrization (f; e) = [F^T(d/dz); E^T(d/dz)] l the quotient "
    "would read -Pi(-zeta, -eta), so Sigma from a kernel pair can differ in sign from that convention. The "
    "skew_adjoint kind takes e itself as the latent variable and is unaffected.";

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw Error(ErrorCode::parse_error, path + ": " + what);
}

const json& field(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object() || !j.contains(key)) fail(path + "." + key, "missing");
    return j.at(key);
}

template <class T>
T get(const json& j, const std::string& key, const std::string& path) {
    try {
        return field(j, key, path).get<T>();
    } catch (const json::exception& e) {
        fail(path + "." + key, e.what());
    }
}

json double_json(const Matrix<double>& m) {
    json out = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
        out.push_back(std::move(row));
    }
    return out;
}

Matrix<double> double_matrix(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of rows");
    const Index r = static_cast<Index>(j.size()), c = r > 0 ? static_cast<Index>(j[0].size()) : 0;
    Matrix<double> out(r, c);
    for (Index i = 0; i < r; ++i) {
        const auto& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != c) fail(path, "ragged matrix");
        for (Index k = 0; k < c; ++k) out(i, k) = row[static_cast<std::size_t>(k)].get<double>();
    }
    return out;
}

// Shapes are stored alongside the entries so that empty matrices keep their dimensions.
json shaped(const RMatrix& m) { return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", to_json(m)}}; }

RMatrix unshaped(const json& j, const std::string& path) {
    const auto rows = get<Index>(j, "rows", path), cols = get<Index>(j, "cols", path);
    RMatrix m = matrix_from_json(field(j, "entries", path), path + ".entries", cols);
    if (m.rows() != rows || m.cols() != cols) fail(path, "entries do not match the declared shape");
    return m;
}

json shaped(const RPolyMatrix& m) { return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", to_json(m)}}; }

RPolyMatrix unshaped_poly(const json& j, const std::string& path) {
    const auto rows = get<Index>(j, "rows", path), cols = get<Index>(j, "cols", path);
    RPolyMatrix m = poly_matrix_from_json(field(j, "entries", path), path + ".entries", cols);
    if (m.rows() != rows || m.cols() != cols) fail(path, "entries do not match the declared shape");
    return m;
}

json to_json(const Verdict& v) { return {{"name", v.name}, {"passed", v.passed}, {"witness", v.witness}}; }

Verdict verdict_from_json(const json& j, const std::string& path) {
    return {get<std::string>(j, "name", path), get<bool>(j, "passed", path), get<std::string>(j, "witness", path)};
}

std::vector<Verdict> verdicts(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    std::vector<Verdict> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(verdict_from_json(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

json to_json(const Inertia& in) { return {{"positive", in.positive}, {"negative", in.negative}, {"zero", in.zero}}; }

std::string show(const RMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (Index i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (Index k = 0; k < m.cols(); ++k) os << (k ? ", " : "") << to_string(m(i, k));
    }
    return os.str() + "]";
}

std::string show(const Matrix<double>& m) {
    std::ostringstream os;
    os << std::setprecision(12) << "[";
    for (Index i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (Index k = 0; k < m.cols(); ++k) os << (k ? ", " : "") << m(i, k);
    }
    return os.str() + "]";
}

}  // namespace

bool operator==(const SplitSection& a, const SplitSection& b) {
    return a.two_point == b.two_point && exactly_equal(a.sigma, b.sigma) && a.p == b.p && a.t.rows() == b.t.rows() &&
           a.t.cols() == b.t.cols() && a.t == b.t && a.residual == b.residual && a.tolerance == b.tolerance;
}

bool operator==(const RealizationSection& x, const RealizationSection& y) {
    return x.kind == y.kind && x.swap == y.swap && exactly_equal(x.a, y.a) && exactly_equal(x.b, y.b) &&
           exactly_equal(x.c, y.c) && exactly_equal(x.d, y.d) && exactly_equal(x.sigma, y.sigma) && x.checks == y.checks;
}

bool operator==(const Report& a, const Report& b) {
    if (a.matrices.size() != b.matrices.size()) return false;
    for (auto i = a.matrices.begin(), k = b.matrices.begin(); i != a.matrices.end(); ++i, ++k)
        if (i->first != k->first || !exactly_equal(i->second, k->second)) return false;
    return a.schema_version == b.schema_version && a.command == b.command && a.kind == b.kind &&
           a.conditions == b.conditions && a.polynomials == b.polynomials && a.forms == b.forms &&
           a.integers == b.integers && a.inertia == b.inertia && a.split == b.split && a.realization == b.realization &&
           a.harness == b.harness && a.notes == b.notes && a.convention == b.convention && a.exit_status == b.exit_status;
}

bool Report::all_passed() const {
    auto ok = [](const Verdict& v) { return v.passed; };
    if (!std::all_of(conditions.begin(), conditions.end(), ok)) return false;
    if (realization && !std::all_of(realization->checks.begin(), realization->checks.end(), ok)) return false;
    if (split && split->residual > split->tolerance) return false;
    return std::all_of(harness.begin(), harness.end(), [](const HarnessSummary& h) {
        return h.failures == 0;
    });
}

json to_json(const RTwoVar& phi) {
    json blocks = json::array();
    for (const auto& [key, b] : phi.blocks()) blocks.push_back({{"zeta", key.first}, {"eta", key.second}, {"block", to_json(b)}});
    return {{"rows", phi.rows()}, {"cols", phi.cols()}, {"blocks", std::move(blocks)}};
}

RTwoVar two_var_from_json(const json& j, const std::string& path) {
    const auto rows = get<Index>(j, "rows", path), cols = get<Index>(j, "cols", path);
    RTwoVar out(rows, cols);
    const json& blocks = field(j, "blocks", path);
    if (!blocks.is_array()) fail(path + ".blocks", "expected an array");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const std::string bp = path + ".blocks[" + std::to_string(i) + "]";
        RMatrix b = matrix_from_json(field(blocks[i], "block", bp), bp + ".block", cols);
        if (b.rows() != rows || b.cols() != cols) fail(bp, "block shape differs from the form");
        out.add(get<Index>(blocks[i], "zeta", bp), get<Index>(blocks[i], "eta", bp), b);
    }
    return out;
}

json to_json(const Report& r) {
    json out{{"schema_version", r.schema_version}, {"command", r.command}, {"kind", r.kind}, {"exit_status", r.exit_status}};
    out["conditions"] = json::array();
    for (const auto& v : r.conditions) out["conditions"].push_back(to_json(v));
    out["polynomials"] = json::object();
    for (const auto& [name, m] : r.polynomials) out["polynomials"][name] = shaped(m);
    out["matrices"] = json::object();
    for (const auto& [name, m] : r.matrices) out["matrices"][name] = shaped(m);
    out["forms"] = json::object();
    for (const auto& [name, f] : r.forms) out["forms"][name] = to_json(f);
    out["integers"] = r.integers;
    out["inertia"] = r.inertia ? to_json(*r.inertia) : json(nullptr);
    if (r.split) {
        const SplitSection& s = *r.split;
        out["split"] = {{"two_point", s.two_point}, {"sigma", shaped(s.sigma)}, {"p", s.p},
                        {"T", double_json(s.t)},         {"residual", s.residual}, {"tolerance", s.tolerance}};
    } else {
        out["split"] = nullptr;
    }
    if (r.realization) {
        const RealizationSection& x = *r.realization;
        json checks = json::array();
        for (const auto& v : x.checks) checks.push_back(to_json(v));
        out["realization"] = {{"kind", x.kind},        {"swap", x.swap},          {"A", shaped(x.a)},
                              {"B", shaped(x.b)},      {"C", shaped(x.c)},        {"D", shaped(x.d)},
                              {"sigma", shaped(x.sigma)}, {"checks", std::move(checks)}};
    } else {
        out["realization"] = nullptr;
    }
    out["harness"] = json::array();
    for (const auto& h : r.harness)
        out["harness"].push_back({{"check", h.check},
                                  {"instance", h.instance},
                                  {"trials", h.trials},
                                  {"failures", h.failures},
                                  {"max_residual", h.max_residual},
                                  {"max_split_error", h.max_split_error},
                                  {"elapsed_seconds", h.elapsed_seconds}});
    out["notes"] = r.notes;
    out["convention"] = r.convention;
    return out;
}

Report report_from_json(const json& j) {
    if (!j.is_object()) fail("report", "expected an object");
    Report r;
    r.schema_version = get<std::string>(j, "schema_version", "report");
    if (r.schema_version.substr(0, 2) != std::string(report_schema_version).substr(0, 2))
        fail("report.schema_version", "unsupported major version " + r.schema_version);
    r.command = get<std::string>(j, "command", "report");
    r.kind = get<std::string>(j, "kind", "report");
    r.exit_status = get<int>(j, "exit_status", "report");
    r.conditions = verdicts(field(j, "conditions", "report"), "report.conditions");
    for (const auto& [name, m] : field(j, "polynomials", "report").items())
        r.polynomials.emplace(name, unshaped_poly(m, "report.polynomials." + name));
    for (const auto& [name, m] : field(j, "matrices", "report").items())
        r.matrices.emplace(name, unshaped(m, "report.matrices." + name));
    for (const auto& [name, f] : field(j, "forms", "report").items())
        r.forms.emplace(name, two_var_from_json(f, "report.forms." + name));
    r.integers = get<std::map<std::string, Index>>(j, "integers", "report");
    if (const json& in = field(j, "inertia", "report"); !in.is_null())
        r.inertia = Inertia{get<Index>(in, "positive", "report.inertia"), get<Index>(in, "negative", "report.inertia"),
                            get<Index>(in, "zero", "report.inertia")};
    if (const json& s = field(j, "split", "report"); !s.is_null()) {
        SplitSection sp;
        sp.two_point = get<bool>(s, "two_point", "report.split");
        sp.sigma = unshaped(field(s, "sigma", "report.split"), "report.split.sigma");
        sp.p = get<Index>(s, "p", "report.split");
        sp.t = double_matrix(field(s, "T", "report.split"), "report.split.T");
        sp.residual = get<double>(s, "residual", "report.split");
        sp.tolerance = get<double>(s, "tolerance", "report.split");
        r.split = std::move(sp);
    }
    if (const json& x = field(j, "realization", "report"); !x.is_null()) {
        RealizationSection rs;
        const std::string p = "report.realization";
        rs.kind = get<std::string>(x, "kind", p);
        rs.swap = get<std::vector<Index>>(x, "swap", p);
        rs.a = unshaped(field(x, "A", p), p + ".A");
        rs.b = unshaped(field(x, "B", p), p + ".B");
        rs.c = unshaped(field(x, "C", p), p + ".C");
        rs.d = unshaped(field(x, "D", p), p + ".D");
        rs.sigma = unshaped(field(x, "sigma", p), p + ".sigma");
        rs.checks = verdicts(field(x, "checks", p), p + ".checks");
        r.realization = std::move(rs);
    }
    const json& harness = field(j, "harness", "report");
    for (std::size_t i = 0; i < harness.size(); ++i) {
        const std::string p = "report.harness[" + std::to_string(i) + "]";
        r.harness.push_back({get<std::string>(harness[i], "check", p), get<std::string>(harness[i], "instance", p),
                             get<Index>(harness[i], "trials", p), get<Index>(harness[i], "failures", p),
                             get<std::string>(harness[i], "max_residual", p), get<double>(harness[i], "max_split_error", p),
                             get<double>(harness[i], "elapsed_seconds", p)});
    }
    r.notes = get<std::vector<std::string>>(j, "notes", "report");
    r.convention = get<std::string>(j, "convention", "report");
    return r;
}

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << "boundary-forge " << r.command << " (" << r.kind << ")\n";
    if (!r.conditions.empty()) {
        os << "\nconditions\n";
        for (const auto& v : r.conditions)
            os << "  " << (v.passed ? "pass" : "FAIL") << "  " << v.name << (v.witness.empty() ? "" : ": " + v.witness) << "\n";
    }
    if (!r.integers.empty() || r.inertia || !r.forms.empty() || !r.polynomials.empty() || !r.matrices.empty()) {
        os << "\nboundary\n";
        for (const auto& [name, v] : r.integers) os << "  " << name << " = " << v << "\n";
        if (r.inertia) os << "  inertia = " << to_string(*r.inertia) << "\n";
        for (const auto& [name, f] : r.forms) os << "  " << name << "(zeta, eta) = " << f << "\n";
        for (const auto& [name, m] : r.polynomials) os << "  " << name << "(s) = " << m << "\n";
        for (const auto& [name, m] : r.matrices) os << "  " << name << " = " << show(m) << "\n";
    }
    if (r.split) {
        const SplitSection& s = *r.split;
        os << "\nsplit" << (s.two_point ? " (two-point form)" : "") << "\n";
        os << "  form = " << show(s.sigma) << "\n  p = " << s.p << "\n  T = " << show(s.t) << "\n";
        os << "  residual = " << s.residual << " (tolerance " << s.tolerance << ")\n";
    }
    if (r.realization) {
        const RealizationSection& x = *r.realization;
        os << "\nrealization (" << x.kind << ")\n  swap = {";
        for (std::size_t i = 0; i < x.swap.size(); ++i) os << (i ? "," : "") << x.swap[i];
        os << "}\n  A = " << show(x.a) << "\n  B = " << show(x.b) << "\n  C = " << show(x.c) << "\n  D = " << show(x.d)
           << "\n";
        for (const auto& v : x.checks)
            os << "  " << (v.passed ? "pass" : "FAIL") << "  " << v.name << (v.witness.empty() ? "" : ": " + v.witness) << "\n";
    }
    if (!r.harness.empty()) {
        os << "\nverification\n";
        for (const auto& h : r.harness) {
            os << "  " << (h.failures == 0 ? "pass" : "FAIL") << "  " << h.check << ": " << (h.trials - h.failures) << "/"
               << h.trials << " exact, max residual " << h.max_residual;
            if (h.max_split_error > 0) os << ", split error " << h.max_split_error;
            os << ", " << std::fixed << std::setprecision(3) << h.elapsed_seconds << "s\n" << std::defaultfloat;
        }
    }
    for (const auto& n : r.notes) os << "\nnote: " << n << "\n";
    if (!r.convention.empty()) os << "\nconvention: " << r.convention << "\n";
    return os.str();
}

}  // namespace bforge
