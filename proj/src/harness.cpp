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

#include <bforge/harness.hpp>

#include <bforge/random.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>

namespace bforge {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t x = seed * 0x9E3779B97F4A7C15ULL + salt + 0x632BE59BD9B4E019ULL;
    x ^= x >> 31;
    return x * 0xBF58476D1CE4E5B9ULL;
}

Rational max_abs_coefficient(const RPolyMatrix& p) {
    Rational best = 0;
    for (const auto& c : p.coeffs())
        for (Index i = 0; i < c.rows(); ++i)
            for (Index j = 0; j < c.cols(); ++j) best = std::max(best, Rational(abs(c(i, j))));
    return best;
}

Rational quadratic(const RVector& x, const RMatrix& mid, const RVector& y) {
    if (x.size() == 0) return 0;
    return (x.transpose() * mid * y)(0, 0);
}

// Degrees of the two latents in trial t cycle through the configured list independently.
std::pair<Index, Index> trial_degrees(const SuiteConfig& cfg, Index t) {
    const auto n = static_cast<Index>(cfg.degrees.size());
    return {cfg.degrees[static_cast<std::size_t>(t % n)], cfg.degrees[static_cast<std::size_t>((t / n) % n)]};
}

struct TrialPair {
    Trajectory first;
    RPolyMatrix second;
};

TrialPair draw_pair(const SuiteConfig& cfg, Index t, Index dim) {
    auto [d1, d2] = trial_degrees(cfg, t);
    TrialPair out{random_latent(mix(cfg.seed, 2 * static_cast<std::uint64_t>(t)), dim, d1),
                  random_latent(mix(cfg.seed, 2 * static_cast<std::uint64_t>(t) + 1), dim, d2).latent};
    if (cfg.interval) {
        out.first.alpha = cfg.interval->first;
        out.first.beta = cfg.interval->second;
    }
    return out;
}

VerificationReport start(const std::string& check, const std::string& instance, Index trials) {
    VerificationReport r;
    r.check = check;
    r.instance = instance;
    r.trials = trials;
    r.residuals.reserve(static_cast<std::size_t>(trials));
    return r;
}

RPolyMatrix skew_part(const RPolyMatrix& k) { return k - para_conjugate(k).transpose(); }

RPolyMatrix swap_columns(const RPolyMatrix& a, const RPolyMatrix& b, const std::vector<Index>& ports, bool first) {
    RPolyMatrix out = first ? a : b;
    for (Index k : ports)
        for (Index i = 0; i < a.rows(); ++i) out.set_entry(i, k, (first ? b : a).entry(i, k));
    return out;
}

// Kernel pair [I, -J] with the flow/effort columns of `ports` exchanged.
DiracInstance ported(const std::string& name, const RPolyMatrix& j, const std::vector<Index>& ports) {
    const RPolyMatrix f = RPolyMatrix::identity(j.rows()), e = -j;
    return {name, swap_columns(f, e, ports, true), swap_columns(f, e, ports, false), std::nullopt};
}

RPolyMatrix poly_matrix(std::initializer_list<std::initializer_list<RPoly>> rows) {
    std::vector<std::vector<RPoly>> e;
    for (const auto& r : rows) e.emplace_back(r);
    return RPolyMatrix::from_entries(e);
}

RPoly mono(Index k, long c = 1) { return RPoly::monomial(k, Rational(c)); }

}  // namespace

Index VerificationReport::failures() const {
    return static_cast<Index>(std::count_if(residuals.begin(), residuals.end(), [](const Rational& r) { return r != 0; }));
}

bool VerificationReport::passed() const {
    if (static_cast<Index>(residuals.size()) != trials || failures() != 0) return false;
    return std::all_of(split_residuals.begin(), split_residuals.end(), [this](double e) { return e <= tolerance; });
}

Trajectory random_latent(std::uint64_t seed, Index dim, Index degree) {
    RationalSource src(seed);
    Trajectory t;
    t.latent = src.vector(dim, degree);
    t.alpha = src.next();
    do t.beta = src.next();
    while (t.beta == t.alpha);
    if (t.beta < t.alpha) std::swap(t.alpha, t.beta);
    return t;
}

Rational integrate_pairing(const RPolyMatrix& f1, const RPolyMatrix& e1, const RPolyMatrix& f2, const RPolyMatrix& e2,
                           const Rational& alpha, const Rational& beta) {
    return definite_integral(dot(e1, f2) + dot(e2, f1), alpha, beta);
}

Rational dirac_form_residual(const BoundaryStructure& s, const RPolyMatrix& l1, const RPolyMatrix& l2,
                             const Rational& alpha, const Rational& beta) {
    const FlowEffort a = flow_effort(s.rep, l1), b = flow_effort(s.rep, l2);
    const Rational interior = integrate_pairing(a.f, a.e, b.f, b.e, alpha, beta);
    const Rational at_beta = quadratic(boundary_value(s.z, l1, beta), s.sigma, boundary_value(s.z, l2, beta));
    const Rational at_alpha = quadratic(boundary_value(s.z, l1, alpha), s.sigma, boundary_value(s.z, l2, alpha));
    return interior - at_beta + at_alpha;
}

Rational power_balance_residual(const BoundaryStructure& s, const RPolyMatrix& l, const Rational& alpha,
                                const Rational& beta) {
    const FlowEffort fe = flow_effort(s.rep, l);
    const RVector bb = boundary_value(s.z, l, beta), ba = boundary_value(s.z, l, alpha);
    return definite_integral(dot(fe.e, fe.f), alpha, beta) - (quadratic(bb, s.sigma, bb) - quadratic(ba, s.sigma, ba)) / 2;
}

double split_balance_error(const BoundaryStructure& s, const PowerSplit& split, const RPolyMatrix& l,
                           const Rational& alpha, const Rational& beta) {
    const FlowEffort fe = flow_effort(s.rep, l);
    const double interior = to_double(definite_integral(dot(fe.e, fe.f), alpha, beta));
    auto port_power = [&](const Rational& at) {
        if (split.p == 0) return 0.0;
        const Vector<double> v = split.t * to_double(RMatrix(boundary_value(s.z, l, at)));
        return v.tail(split.p).dot(v.head(split.p));
    };
    const double at_beta = port_power(beta), at_alpha = port_power(alpha);
    const double scale = std::max({1.0, std::abs(interior), std::abs(at_beta), std::abs(at_alpha)});
    return std::abs(interior - (at_beta - at_alpha)) / scale;
}

VerificationReport check_power_balance(const BoundaryStructure& s, const Trajectory& l,
                                       const std::optional<PowerSplit>& split) {
    const auto t0 = Clock::now();
    VerificationReport r = start("power_balance", "", 1);
    r.residuals.push_back(power_balance_residual(s, l.latent, l.alpha, l.beta));
    if (split) {
        r.tolerance = split->tolerance;
        r.split_residuals.push_back(split_balance_error(s, *split, l.latent, l.alpha, l.beta));
    }
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

VerificationReport check_dirac_form(const BoundaryStructure& s, const RPolyMatrix& l1, const RPolyMatrix& l2,
                                    const Rational& alpha, const Rational& beta) {
    const auto t0 = Clock::now();
    VerificationReport r = start("dirac_form", "", 1);
    r.residuals.push_back(dirac_form_residual(s, l1, l2, alpha, beta));
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

VerificationReport derivative_rule_check(const RTwoVar& phi, const RPolyMatrix& v, const RPolyMatrix& w) {
    const auto t0 = Clock::now();
    VerificationReport r = start("derivative_rule", "", 1);
    const RPoly residual = derivative(bdf_apply(phi, v, w)) - bdf_apply(mul_zeta_plus_eta(phi), v, w);
    r.residuals.push_back(max_abs_coefficient(RPolyMatrix::from_entries({{residual}})));
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

Rational realization_residual(const RPolyMatrix& z, const PortRows& rows, const Realization& r, const RPolyMatrix& l) {
    const RPolyMatrix b = apply(z, l), u = apply(rows.u, l), y = apply(rows.y, l);
    const RPolyMatrix state = derivative(b) - r.a * b - r.b * u;
    const RPolyMatrix output = y - r.c * b - r.d * u;
    return std::max(max_abs_coefficient(state), max_abs_coefficient(output));
}

VerificationReport dirac_suite(const BoundaryStructure& s, const SuiteConfig& cfg, const std::string& instance) {
    const auto t0 = Clock::now();
    VerificationReport r = start("dirac_form", instance, cfg.trials);
    for (Index t = 0; t < cfg.trials; ++t) {
        TrialPair p = draw_pair(cfg, t, s.latent_dim());
        r.residuals.push_back(dirac_form_residual(s, p.first.latent, p.second, p.first.alpha, p.first.beta));
    }
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

VerificationReport power_balance_suite(const BoundaryStructure& s, const SuiteConfig& cfg,
                                       const std::optional<PowerSplit>& split, const std::string& instance) {
    const auto t0 = Clock::now();
    VerificationReport r = start("power_balance", instance, cfg.trials);
    if (split) r.tolerance = split->tolerance;
    for (Index t = 0; t < cfg.trials; ++t) {
        const Trajectory l = draw_pair(cfg, t, s.latent_dim()).first;
        r.residuals.push_back(power_balance_residual(s, l.latent, l.alpha, l.beta));
        if (split) r.split_residuals.push_back(split_balance_error(s, *split, l.latent, l.alpha, l.beta));
    }
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

VerificationReport constrained_suite(const ConstrainedStructure& s, const SuiteConfig& cfg, const std::string& instance) {
    const auto t0 = Clock::now();
    VerificationReport r = start("constrained_form", instance, cfg.trials);
    for (Index t = 0; t < cfg.trials; ++t) {
        auto [d1, d2] = trial_degrees(cfg, t);
        const auto salt = 3 * static_cast<std::uint64_t>(t);
        const ConstrainedSolution a = constrained_sample(s, d1, mix(cfg.seed, salt));
        const ConstrainedSolution b = constrained_sample(s, d2, mix(cfg.seed, salt + 1));
        Trajectory iv = random_latent(mix(cfg.seed, salt + 2), 0, 0);
        if (cfg.interval) std::tie(iv.alpha, iv.beta) = *cfg.interval;
        r.residuals.push_back(constrained_form(s, a, b, iv.alpha, iv.beta));
    }
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

VerificationReport lagrange_suite(const LagrangeBoundary& b, const SuiteConfig& cfg, const std::string& instance) {
    const auto t0 = Clock::now();
    VerificationReport r = start("lagrange_form", instance, cfg.trials);
    for (Index t = 0; t < cfg.trials; ++t) {
        TrialPair p = draw_pair(cfg, t, b.latent_dim());
        r.residuals.push_back(lagrange_form(b, p.first.latent, p.second, p.first.alpha, p.first.beta));
    }
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

namespace {

template <class Structure>
VerificationReport realization_trials(const Structure& s, const RPolyMatrix& z, const Realization& real,
                                      const SuiteConfig& cfg, const std::string& instance) {
    const auto t0 = Clock::now();
    VerificationReport r = start("realization_consistency", instance, cfg.trials);
    const PortRows rows = port_rows(s, real.swap);
    for (Index t = 0; t < cfg.trials; ++t)
        r.residuals.push_back(realization_residual(z, rows, real, draw_pair(cfg, t, s.latent_dim()).first.latent));
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

}  // namespace

VerificationReport realization_suite(const BoundaryStructure& s, const Realization& r, const SuiteConfig& cfg,
                                     const std::string& instance) {
    return realization_trials(s, s.z, r, cfg, instance);
}

VerificationReport realization_suite(const LagrangeBoundary& b, const Realization& r, const SuiteConfig& cfg,
                                     const std::string& instance) {
    return realization_trials(b, b.w, r, cfg, instance);
}

BoundaryStructure build_structure(const DiracInstance& inst) {
    if (inst.j) return skew_adjoint_structure(*inst.j);
    return boundary_structure(validate_dirac_pair(inst.f, inst.e));
}

std::vector<DiracInstance> curated_dirac_instances() {
    const RPoly s = mono(1), one = mono(0), zero;
    const RPolyMatrix wave = poly_matrix({{zero, s}, {s, zero}});
    const RPolyMatrix beam = poly_matrix({{zero, mono(2)}, {-mono(2), zero}});
    const RPolyMatrix timoshenko = poly_matrix({{zero, s, zero}, {s, zero, one}, {zero, -one, zero}});
    const RPolyMatrix gyrator = poly_matrix({{s, one}, {-one, s}});

    std::vector<DiracInstance> out;
    auto skew = [&](std::string name, RPolyMatrix j) { out.push_back({std::move(name), {}, {}, std::move(j)}); };
    auto kernel = [&](std::string name, RPolyMatrix f, RPolyMatrix e) {
        out.push_back({std::move(name), std::move(f), std::move(e), std::nullopt});
    };

    skew("wave", wave);
    kernel("wave_kernel", wave, RPolyMatrix::identity(2));
    kernel("transport", poly_matrix({{s}}), poly_matrix({{one}}));
    kernel("third_order", poly_matrix({{mono(3)}}), poly_matrix({{one}}));
    kernel("degenerate", RPolyMatrix(2, 2), RPolyMatrix::identity(2));
    skew("beam", beam);
    skew("timoshenko", timoshenko);
    skew("gyrator", gyrator);
    skew("odd_scalar", poly_matrix({{mono(3) + s}}));
    skew("beam_with_spring", poly_matrix({{zero, mono(2) + one}, {-mono(2) - one, zero}}));
    kernel("dual_transport", poly_matrix({{s, zero}, {zero, one}}), poly_matrix({{one, zero}, {zero, s}}));
    out.push_back(ported("wave_port1", wave, {0}));
    out.push_back(ported("timoshenko_port2", timoshenko, {1}));
    out.push_back(ported("gyrator_ports12", gyrator, {0, 1}));

    // Generated J = K(s) - K^T(-s) with random K of degree <= 3; only the seed is curated.
    for (std::uint64_t seed : {11u, 12u, 13u, 14u}) {
        RationalSource src(seed);
        const Index m = 1 + static_cast<Index>(seed % 3);
        RPolyMatrix k(m, m);
        for (Index i = 0; i < m; ++i)
            for (Index j = 0; j < m; ++j) k.set_entry(i, j, src.poly(3));
        std::vector<Index> ports;
        for (Index i = 0; i < m; ++i)
            if (src.integer(0, 1)) ports.push_back(i);
        out.push_back(ported("random_skew_" + std::to_string(seed), skew_part(k), ports));
    }
    return out;
}

std::vector<ConstrainedInstance> curated_constrained_instances() {
    const RPoly s = mono(1), one = mono(0), zero;
    const RPolyMatrix wave = poly_matrix({{zero, s}, {s, zero}});
    return {
        {"scalar_constraint", poly_matrix({{s}}), poly_matrix({{s}})},
        {"wave_unconstrained", wave, RPolyMatrix(1, 2)},
        {"pure_constraint", poly_matrix({{zero}}), poly_matrix({{mono(2)}})},
        {"wave_pinned", wave, poly_matrix({{one, zero}})},
        {"wave_coupled", wave, poly_matrix({{s, -one}})},
        {"beam_constraint", poly_matrix({{zero, mono(2)}, {-mono(2), zero}}), poly_matrix({{s, zero}})},
        {"gyrator_free", poly_matrix({{s, one}, {-one, s}}), RPolyMatrix(0, 2)},
        {"timoshenko_constraint", poly_matrix({{zero, s, zero}, {s, zero, one}, {zero, -one, zero}}),
         poly_matrix({{one, zero, -s}})},
    };
}

std::vector<LagrangeInstance> curated_lagrange_instances() {
    const RPoly s = mono(1), one = mono(0), zero;
    return {
        {"string", poly_matrix({{one}}), poly_matrix({{mono(2)}})},
        {"identity", RPolyMatrix::identity(2), RPolyMatrix::identity(2)},
        {"spring_string", poly_matrix({{one}}), poly_matrix({{mono(2) + 2 * one}})},
        {"inverse_string", poly_matrix({{mono(2)}}), poly_matrix({{one}})},
        {"coupled", RPolyMatrix::identity(2), poly_matrix({{mono(2), s}, {-s, one}})},
        {"mixed_roles", poly_matrix({{one, zero}, {zero, mono(2)}}), poly_matrix({{mono(2), zero}, {zero, one}})},
        {"three_port", RPolyMatrix::identity(3),
         poly_matrix({{mono(2), s, zero}, {-s, one, zero}, {zero, zero, mono(2) + one}})},
    };
}

RPolyMatrix random_unimodular(Index m, std::uint64_t seed, Index degree, Index steps) {
    RationalSource src(seed);
    RPolyMatrix w = RPolyMatrix::identity(m);
    if (m > 1) {
        for (Index k = 0; k < steps; ++k) {
            const Index i = src.integer(0, static_cast<int>(m) - 1);
            Index j = src.integer(0, static_cast<int>(m) - 2);
            if (j >= i) ++j;
            RPolyMatrix e = RPolyMatrix::identity(m);
            e.set_entry(i, j, src.poly(degree));
            w = e * w;
        }
        std::vector<Index> perm(static_cast<std::size_t>(m));
        for (Index i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), src.engine());
        w = w.select_rows(perm);
    }
    RMatrix scale = RMatrix::Zero(m, m);
    for (Index i = 0; i < m; ++i) scale(i, i) = src.nonzero();
    return scale * w;
}

DiracInstance transformed(const DiracInstance& inst, const RPolyMatrix& w, const std::string& name) {
    RPolyMatrix f = inst.f, e = inst.e;
    if (inst.j) {
        f = RPolyMatrix::identity(inst.j->rows());
        e = -*inst.j;
    }
    return {name, w * f, w * e, std::nullopt};
}

}  // namespace bforge
