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

#include <bforge/cli.hpp>

#include <bforge/constrained.hpp>
#include <bforge/dirac.hpp>
#include <bforge/harness.hpp>
#include <bforge/lagrange.hpp>
#include <bforge/realize.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

namespace bforge {

namespace {

template <class T>
std::string show(const T& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

// Problems that make the requested subcommand meaningless; reported with exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    const Options& options;
    const ProblemFile& problem;
    Report& report;
    double tolerance = 1e-9;
    SuiteConfig suite;

    bool wants(Subcommand stage) const {
        const Subcommand c = options.command;
        switch (stage) {
            case Subcommand::check: return true;
            case Subcommand::boundary: return c != Subcommand::check;
            default: return c == stage || c == Subcommand::report;
        }
    }

    bool add(std::string name, bool passed, std::string witness = "") {
        report.conditions.push_back({std::move(name), passed, std::move(witness)});
        return passed;
    }

    void add(const VerificationReport& v) {
        HarnessSummary h{v.check, v.instance, v.trials, v.failures(), "0", 0.0, v.elapsed_seconds};
        Rational worst = 0;
        for (const auto& r : v.residuals) worst = std::max(worst, Rational(abs(r)));
        h.max_residual = to_string(worst);
        for (double e : v.split_residuals) {
            h.max_split_error = std::max(h.max_split_error, e);
            if (e > v.tolerance) ++h.failures;
        }
        if (static_cast<Index>(v.residuals.size()) != v.trials) ++h.failures;
        report.harness.push_back(std::move(h));
    }
};

SuiteConfig suite_config(const Options& o, const Settings& s) {
    SuiteConfig cfg;
    if (auto t = o.trials ? o.trials : s.trials) cfg.trials = *t;
    if (auto d = o.degree ? o.degree : s.degree) cfg.degrees = {0, *d / 3, *d};
    cfg.degrees.erase(std::unique(cfg.degrees.begin(), cfg.degrees.end()), cfg.degrees.end());
    if (auto seed = o.seed ? o.seed : s.seed) cfg.seed = *seed;
    cfg.interval = o.interval ? o.interval : s.interval;
    if (cfg.trials < 1) throw UsageError("--trials must be positive");
    if (cfg.degrees.front() < 0) throw UsageError("--degree must be non-negative");
    if (cfg.interval && !(cfg.interval->first < cfg.interval->second))
        throw UsageError("the interval must satisfy alpha < beta");
    return cfg;
}

SplitSection split_section(bool two_point, const RMatrix& sigma, const PowerSplit& split) {
    return {two_point, sigma, split.p, split.t, split.residual, split.tolerance};
}

void add_split(Context& ctx, const SplitSection& s) {
    ctx.report.split = s;
    ctx.add("split residual", s.residual <= s.tolerance,
            "max |T^T Q_p T - form| = " + show(s.residual) + ", tolerance " + show(s.tolerance));
}

// Splits Sigma, or the doubled two-point form when asked for or, under `report`, when Sigma is unbalanced.
void split_dirac(Context& ctx, const BoundaryStructure& s) {
    const auto two_point = [&] {
        const TwoPointForm tp = two_point_form(s, ctx.tolerance);
        add_split(ctx, split_section(true, tp.sigma, tp.split));
    };
    if (ctx.options.two_point) return two_point();
    try {
        add_split(ctx, split_section(false, s.sigma, canonical_power_split(s.sigma, ctx.tolerance)));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::unbalanced_signature) throw;
        if (ctx.options.command != Subcommand::report) {
            ctx.add("balanced signature", false, std::string(to_string(e.code())) + ": " + e.what());
            return;
        }
        ctx.report.notes.push_back("the signature of Sigma is unbalanced; split the doubled two-point form instead");
        two_point();
    }
}

std::optional<PowerSplit> balanced_split(const BoundaryStructure& s, double tolerance) {
    try {
        return canonical_power_split(s.sigma, tolerance);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::unbalanced_signature) throw;
        return std::nullopt;
    }
}

void add_structure_checks(Context& ctx, const Realization& r) {
    const StructureResiduals res = verify_realization_structure(r);
    const auto zero = [](const RMatrix& m) { return exactly_equal(m, RMatrix::Zero(m.rows(), m.cols())); };
    auto& checks = ctx.report.realization->checks;
    checks.push_back({"A^T Sigma + Sigma A = 0", zero(res.lyapunov), zero(res.lyapunov) ? "" : show(res.lyapunov)});
    checks.push_back({"B^T Sigma = C", zero(res.output), zero(res.output) ? "" : show(res.output)});
    const std::string feed = r.kind == RealizationKind::dirac ? "D = -D^T" : "D = D^T";
    checks.push_back({feed, zero(res.feedthrough), zero(res.feedthrough) ? "" : show(res.feedthrough)});
    if (r.kind == RealizationKind::dirac)
        checks.push_back({"J = -J^T", zero(res.interconnection), zero(res.interconnection) ? "" : show(res.interconnection)});
}

const char* status_name(RealizeStatus s) {
    switch (s) {
        case RealizeStatus::ok: return "Solved";
        case RealizeStatus::unsolvable: return "Unsolvable";
        case RealizeStatus::non_unique: return "NonUniqueSolution";
    }
    return "";
}

template <class Structure>
std::optional<Realization> realize_structure(Context& ctx, const Structure& s) {
    RealizeOutcome outcome;
    if (ctx.options.swap) {
        try {
            outcome = realize(s, *ctx.options.swap);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::dimension_mismatch) throw;
            throw UsageError(std::string("--swap: ") + e.what());
        }
    } else {
        PartitionResult found = partition_search(s);
        if (!found.found()) {
            std::string witness = "NoneFound:";
            for (const auto& w : found.witnesses) witness += " " + w + ";";
            ctx.add("realization", false, witness);
            return std::nullopt;
        }
        outcome = std::move(found.outcome);
    }
    if (!outcome.ok()) {
        std::string witness = std::string(status_name(outcome.status)) + ": " + outcome.witness;
        if (outcome.status == RealizeStatus::non_unique) witness += " (freedom " + std::to_string(outcome.freedom) + ")";
        ctx.add("realization", false, witness);
        return std::nullopt;
    }
    const Realization& r = *outcome.realization;
    ctx.add("realization", true);
    ctx.report.realization = RealizationSection{r.kind == RealizationKind::dirac ? "dirac" : "lagrange",
                                                r.swap, r.a, r.b, r.c, r.d, r.sigma, {}};
    add_structure_checks(ctx, r);
    return r;
}

void emit_dirac_boundary(Context& ctx, const BoundaryStructure& s) {
    Report& r = ctx.report;
    r.polynomials.emplace("N_f", s.rep.n_f);
    r.polynomials.emplace("N_e", s.rep.n_e);
    r.polynomials.emplace("Z", s.z);
    r.forms.emplace("Pi", s.pi);
    r.matrices.emplace("Sigma", s.sigma);
    r.integers.emplace("m", s.ports());
    r.integers.emplace("n", s.dimension());
    r.inertia = s.inertia;
    const RTwoVar rebuilt = outer(s.z, s.sigma, s.z);
    ctx.add("Pi = Z^T(zeta) Sigma Z(eta)", rebuilt == s.pi);
    ctx.add("(zeta + eta) Pi = pairing", mul_zeta_plus_eta(s.pi) == s.pairing);
}

void run_dirac(Context& ctx, const BoundaryStructure& s) {
    if (!ctx.wants(Subcommand::boundary)) return;
    emit_dirac_boundary(ctx, s);
    if (ctx.wants(Subcommand::split)) split_dirac(ctx, s);
    std::optional<Realization> real;
    if (ctx.wants(Subcommand::realize)) real = realize_structure(ctx, s);
    if (!ctx.wants(Subcommand::verify)) return;
    const std::string name = ctx.options.problem.stem().string();
    ctx.add(dirac_suite(s, ctx.suite, name));
    ctx.add(power_balance_suite(s, ctx.suite, balanced_split(s, ctx.tolerance), name));
    if (real) ctx.add(realization_suite(s, *real, ctx.suite, name));
}

void run_kernel(Context& ctx) {
    const RPolyMatrix& f = ctx.problem.matrix("F");
    const RPolyMatrix& e = ctx.problem.matrix("E");
    const DiracConditions c = check_dirac_conditions(f, e);
    ctx.add("skew condition", c.skew_ok, c.skew_ok ? "" : "F(-s) E^T(s) + E(-s) F^T(s) = " + show(c.skew_residual));
    ctx.add("rank condition", c.rank_ok, "gcd of the maximal minors of [F E] = " + to_string(c.minors_gcd));
    if (!c.passed()) return;
    run_dirac(ctx, boundary_structure(validate_dirac_pair(f, e)));
}

void run_skew_adjoint(Context& ctx) {
    const RPolyMatrix& j = ctx.problem.matrix("J");
    const SkewAdjointCheck c = check_skew_adjoint(j);
    if (!ctx.add("skew-adjoint", c.passed(), c.passed() ? "" : "J(s) + J^T(-s) = " + show(c.residual))) return;
    run_dirac(ctx, skew_adjoint_structure(j));
}

void run_constrained(Context& ctx) {
    const RPolyMatrix& j = ctx.problem.matrix("J");
    const SkewAdjointCheck c = check_skew_adjoint(j);
    if (!ctx.add("skew-adjoint", c.passed(), c.passed() ? "" : "J(s) + J^T(-s) = " + show(c.residual))) return;
    if (ctx.options.command == Subcommand::realize)
        throw UsageError("realize is defined for dirac, skew_adjoint and lagrange problems, not constrained ones");
    if (!ctx.wants(Subcommand::boundary)) return;

    const ConstrainedStructure s = constrained_boundary(j, ctx.problem.matrix("G"));
    Report& r = ctx.report;
    r.polynomials.emplace("Z_J", s.z_j);
    r.polynomials.emplace("Z_G", s.z_g);
    r.polynomials.emplace("V_G", s.v_g);
    r.forms.emplace("Pi_J", s.pi_j);
    r.forms.emplace("G_quotient", s.pi_g_form);
    r.matrices.emplace("Sigma_J", s.sigma_j);
    r.matrices.emplace("Pi_G", s.pi_g);
    r.integers.emplace("m", s.efforts());
    r.integers.emplace("k", s.multipliers());
    r.integers.emplace("n_J", s.z_j.rows());
    r.integers.emplace("n_G", s.z_g.rows());
    r.inertia = s.inertia_j;
    ctx.add("Pi_J = Z_J^T(zeta) Sigma_J Z_J(eta)", outer(s.z_j, s.sigma_j, s.z_j) == s.pi_j);
    ctx.add("G_quotient = Z_G^T(zeta) Pi_G V_G(eta)", outer(s.z_g, s.pi_g, s.v_g) == s.pi_g_form);

    if (ctx.wants(Subcommand::split)) {
        r.notes.push_back("the multiplier boundary pair (b_G, c_G) is already split; only Sigma_J is split");
        split_dirac(ctx, skew_adjoint_structure(j));
    }
    if (ctx.wants(Subcommand::verify)) ctx.add(constrained_suite(s, ctx.suite, ctx.options.problem.stem().string()));
}

void run_lagrange(Context& ctx) {
    const RPolyMatrix& p = ctx.problem.matrix("P");
    const RPolyMatrix& sm = ctx.problem.matrix("S");
    const LagrangeConditions c = check_lagrange_conditions(p, sm);
    ctx.add("symmetry condition", c.symmetry_ok,
            c.symmetry_ok ? "" : "P^T(-s) S(s) - S^T(-s) P(s) = " + show(c.symmetry_residual));
    ctx.add("rank condition", c.rank_ok, "gcd of the maximal minors of [P; S] = " + to_string(c.minors_gcd));
    if (!c.passed() || !ctx.wants(Subcommand::boundary)) return;

    const LagrangeBoundary b = lagrange_boundary(validate_lagrange_pair(p, sm));
    Report& r = ctx.report;
    r.polynomials.emplace("N_x", b.rep.n_x);
    r.polynomials.emplace("N_e", b.rep.n_e);
    r.polynomials.emplace("W", b.w);
    r.forms.emplace("Theta", b.theta);
    r.integers.emplace("m", b.ports());
    r.integers.emplace("n", b.dimension());
    r.integers.emplace("p", b.p);
    const RMatrix jp = symplectic_unit<Rational>(b.p);
    ctx.add("Theta = W^T(zeta) J_p W(eta)", outer(b.w, jp, b.w) == b.theta);
    ctx.add("(zeta + eta) Theta = pairing", mul_zeta_plus_eta(b.theta) == b.pairing);

    if (ctx.wants(Subcommand::split)) {
        r.notes.push_back("the boundary form is J_p exactly; w = (x_d; e_d) is already split");
        if (ctx.options.two_point) r.notes.push_back("--two-point has no effect on lagrange problems");
        PowerSplit exact{Matrix<double>::Identity(2 * b.p, 2 * b.p), b.p, 0.0, ctx.tolerance};
        add_split(ctx, split_section(false, jp, exact));
    }
    std::optional<Realization> real;
    if (ctx.wants(Subcommand::realize)) real = realize_structure(ctx, b);
    if (!ctx.wants(Subcommand::verify)) return;
    const std::string name = ctx.options.problem.stem().string();
    ctx.add(lagrange_suite(b, ctx.suite, name));
    if (real) ctx.add(realization_suite(b, *real, ctx.suite, name));
}

std::vector<Index> parse_swap(const std::string& text) {
    std::vector<Index> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty()) continue;
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || value < 1) throw CLI::ValidationError("--swap", "expected 1-based port indices, got '" + item + "'");
        out.push_back(value);
    }
    return out;
}

Rational parse_rational(const std::string& text, const std::string& flag) {
    try {
        return rational_from_json(nlohmann::json(text), flag);
    } catch (const Error& e) {
        throw CLI::ValidationError(flag, e.what());
    }
}

}  // namespace

const char* to_string(Subcommand command) noexcept {
    switch (command) {
        case Subcommand::check: return "check";
        case Subcommand::boundary: return "boundary";
        case Subcommand::split: return "split";
        case Subcommand::realize: return "realize";
        case Subcommand::verify: return "verify";
        case Subcommand::report: return "report";
    }
    return "";
}

std::optional<Subcommand> subcommand_from_string(const std::string& name) {
    for (Subcommand c : {Subcommand::check, Subcommand::boundary, Subcommand::split, Subcommand::realize,
                         Subcommand::verify, Subcommand::report})
        if (name == to_string(c)) return c;
    return std::nullopt;
}

Report run(const Options& options, const ProblemFile& problem) {
    Report report;
    report.command = to_string(options.command);
    report.kind = to_string(problem.kind);
    report.convention = convention_note;
    try {
        Context ctx{options, problem, report, options.tolerance.value_or(problem.settings.tolerance.value_or(1e-9)),
                    suite_config(options, problem.settings)};
        if (!(ctx.tolerance > 0)) throw UsageError("the tolerance must be positive");
        switch (problem.kind) {
            case ProblemKind::dirac: run_kernel(ctx); break;
            case ProblemKind::skew_adjoint: run_skew_adjoint(ctx); break;
            case ProblemKind::constrained: run_constrained(ctx); break;
            case ProblemKind::lagrange: run_lagrange(ctx); break;
        }
        report.exit_status = report.all_passed() ? exit_ok : exit_failure;
    } catch (const UsageError& e) {
        report.notes.push_back(std::string("usage error: ") + e.what());
        report.exit_status = exit_usage;
    } catch (const Error& e) {
        report.notes.push_back(std::string(to_string(e.code())) + ": " + e.what());
        report.exit_status = exit_failure;
    }
    return report;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Boundary structures of differential-operator Dirac structures and Lagrangian subspaces", "boundary-forge"};
    Options options;
    std::string command, swap, format = "text";
    std::vector<std::string> interval;
    app.add_option("subcommand", command, "check | boundary | split | realize | verify | report")->required();
    app.add_option("problem", options.problem, "problem file (JSON)")->required();
    app.add_option("--interval", interval, "integration interval A B (rationals such as 0 or 1/2)")->expected(2);
    app.add_option("--trials", options.trials, "random trials per check");
    app.add_option("--degree", options.degree, "largest latent degree");
    app.add_option("--seed", options.seed, "random seed");
    app.add_option("--swap", swap, "1-based ports whose roles are exchanged, e.g. 1,3");
    app.add_flag("--two-point", options.two_point, "split the doubled two-point form");
    app.add_option("--tolerance", options.tolerance, "floating-point tolerance of the power split");
    app.add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        auto sub = subcommand_from_string(command);
        if (!sub) throw CLI::ValidationError("subcommand", "unknown subcommand '" + command + "'");
        options.command = *sub;
        if (app.count("--swap")) options.swap = parse_swap(swap);
        if (interval.size() == 2)
            options.interval = std::pair{parse_rational(interval[0], "--interval"), parse_rational(interval[1], "--interval")};
        options.format = format == "structured" ? OutputFormat::structured : OutputFormat::text;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "boundary-forge: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    ProblemFile problem;
    try {
        problem = parse_problem(options.problem);
    } catch (const Error& e) {
        err << "boundary-forge: " << to_string(e.code()) << ": " << e.what() << "\n";
        return exit_usage;
    }
    const Report report = run(options, problem);
    if (options.format == OutputFormat::structured)
        out << to_json(report).dump(2) << "\n";
    else
        out << render_text(report);
    if (report.exit_status == exit_usage)
        for (const auto& n : report.notes) err << "boundary-forge: " << n << "\n";
    return report.exit_status;
}

}  // namespace bforge
