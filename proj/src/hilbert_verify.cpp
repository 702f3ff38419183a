#include "longmem/hilbert_verify.hpp"

#include "longmem/errors.hpp"
#include "longmem/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace longmem {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I{0.0, 1.0};

double rel_diff(cplx a, cplx b) {
    const double s = std::abs(a) + std::abs(b);
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

cplx poly_g(const GeneratingBundle& b, cplx z) {
    cplx s = 0.0;
    for (std::size_t k = b.g.size(); k-- > 0;) s = (s + b.g[k]) * z;
    return s;
}

// θ(z)θ(1/z)/(φ(z)φ(1/z))
cplx arma_ratio(const ProcessSpec& spec, cplx z) {
    const cplx zi = 1.0 / z;
    return spec.theta()(z) * spec.theta()(zi) / (spec.phi()(z) * spec.phi()(zi));
}

GPair continuation_with_q(const GeneratingBundle& b, cplx z, cplx q) {
    const cplx zi = 1.0 / z;
    const GPair out = g_series(b, zi);
    const cplx zn = std::pow(z, b.n);
    const cplx common = 2.0 * pi * arma_ratio(b.spec, z) * q;
    return {common * (1.0 - poly_g(b, z)) - zn * out.G1, common * (1.0 - poly_g(b, zi)) * zn - zn * out.G0};
}

GPair to_phi(const GeneratingBundle& b, cplx z, GPair g) {
    const cplx f = std::pow(z, b.spec.q()) * b.spec.phi()(1.0 / z);
    return {f * g.G0, f * g.G1};
}

ConditionCheck make_check(std::string name, double tol) {
    ConditionCheck c;
    c.name = std::move(name);
    c.tolerance = tol;
    return c;
}

void finish(ConditionCheck& c) {
    c.pass = std::all_of(c.residuals.begin(), c.residuals.end(),
                         [&](double r) { return std::isfinite(r) && r < c.tolerance; });
}

}  // namespace

GeneratingBundle build_bundle(const ProcessSpec& spec, const PredictorTrace& trace, const CovarianceTable& cov,
                              int n, int J) {
    if (n < 2) throw DomainError("order n must be at least 2");
    if (trace.n_max != n) throw DomainError("Levinson trace must be computed to order n exactly");
    const int extent = J + GeneratingBundle::tail_terms;
    if (cov.n_max < n + extent) throw DomainError("covariance table does not cover lag n + J");
    GeneratingBundle b{.spec = spec, .n = n, .J = J};
    b.g = trace.weights_final;
    b.sigma2 = trace.sigma_sq(n);
    b.alpha = trace.alpha(n);
    const auto residual_at = [&](long j) {
        double s = cov(j);
        for (int k = 1; k < n; ++k) s -= b.g[k - 1] * cov(j - k);
        return s;
    };
    b.gL.resize(extent + 1);
    b.gR.resize(extent + 1);
    for (int m = 0; m <= extent; ++m) {
        b.gL[m] = residual_at(-m);
        b.gR[m] = residual_at(n + m);
    }
    for (long j : {1L, static_cast<long>(n / 2), static_cast<long>(n - 1)})
        b.form_residual = std::max(b.form_residual, std::abs(residual_at(j)) / cov(0));
    return b;
}

GeneratingBundle build_bundle(const ProcessSpec& spec, int n, int J) {
    const CovarianceTable cov = arima_covariance(spec, n + J + GeneratingBundle::tail_terms);
    const PredictorTrace trace = levinson(cov, n, Precision::double_double);
    return build_bundle(spec, trace, cov, n, J);
}

cplx series_with_tail(const std::vector<double>& a, int explicit_terms, cplx w) {
    if (std::abs(w) > 1.0 + 1e-15) throw DomainError("series evaluated outside its disk of convergence");
    if (std::abs(1.0 - w) < 1e-6) throw DomainError("series evaluated at the singular point 1");
    const int K = static_cast<int>(a.size()) - explicit_terms - 1;
    if (K < 1) throw DomainError("not enough terms for the tail");
    cplx sum = 0.0, p = 1.0;
    for (int m = 0; m < explicit_terms; ++m, p *= w) sum += a[m] * p;
    // Euler transform: Σ_j a_{M+j} w^j = Σ_k (w/(1−w))^k Δ^k a_M / (1 − w).
    std::vector<double> diff(a.begin() + explicit_terms, a.end());
    const cplx r = w / (1.0 - w);
    cplx tail = 0.0, rk = 1.0, last = 0.0;
    for (int k = 0; k <= K; ++k, rk *= r) {
        last = rk * diff[0];
        tail += last;
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
        diff.pop_back();
    }
    tail *= p / (1.0 - w);
    const double scale = std::abs(sum) + std::abs(tail) + std::abs(a[0]);
    if (std::abs(last * p / (1.0 - w)) > 1e-11 * scale) throw ConvergenceError("series tail did not settle; increase J");
    return sum + tail;
}

GPair g_series(const GeneratingBundle& b, cplx z) {
    const cplx w = 1.0 / z;
    return {series_with_tail(b.gL, b.J, w), series_with_tail(b.gR, b.J, w)};
}

GPair g_continuation(const GeneratingBundle& b, cplx z) {
    if (std::abs(z) >= 1.0) throw DomainError("continuation route needs |z| < 1");
    if (std::abs(z.imag()) == 0.0 && z.real() >= 0.0) throw BranchCutError("z on the cut [0, 1)");
    return continuation_with_q(b, z, q_extension(z, b.spec.d()));
}

GPair g_continuation_boundary(const GeneratingBundle& b, double t, int side) {
    if (!(t > 0.0 && t < 1.0)) throw DomainError("boundary values are defined on (0, 1)");
    return continuation_with_q(b, cplx(t, 0.0), q_boundary_polylog(t, b.spec.d(), side));
}

GPair g_functions(const GeneratingBundle& b, cplx z) {
    return std::abs(z) >= 1.0 ? g_series(b, z) : g_continuation(b, z);
}

GPair phi_functions(const GeneratingBundle& b, cplx z) { return to_phi(b, z, g_functions(b, z)); }

bool HilbertReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const ConditionCheck& c) { return c.pass; });
}

const ConditionCheck& HilbertReport::check(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw DomainError("no check named " + name);
}

HilbertReport check_hilbert_conditions(const GeneratingBundle& b, const AnalyticContext& ctx,
                                       const HilbertSamples& samples) {
    const ProcessSpec& spec = b.spec;
    const double d = spec.d();
    const int q = spec.q();
    const Polynomial& phi = spec.phi();
    HilbertReport rep;
    rep.n = b.n;
    rep.d = d;

    // Limits at infinity; averaging over z·i^k removes the terms of order 1..3 in 1/z.
    {
        auto c = make_check("limits_at_infinity", 1e-6);
        cplx g0 = 0.0, g1 = 0.0, rot = 1.0;
        for (int k = 0; k < 4; ++k, rot *= I) {
            const GPair v = g_series(b, samples.infinity_z * rot);
            g0 += 0.25 * v.G0;
            g1 += 0.25 * v.G1;
        }
        c.points = {samples.infinity_z};
        c.residuals = {std::abs(g0.real() / b.sigma2 - 1.0), std::abs((g1 / g0).real() - b.alpha) / std::abs(b.alpha)};
        finish(c);
        rep.checks.push_back(c);
    }

    // Fourier-domain identity on the unit circle.
    {
        auto c = make_check("fourier_identity", 1e-8);
        for (double lam : samples.fourier_lambda) {
            const cplx e = std::exp(I * lam);
            const cplx hat_l = series_with_tail(b.gL, b.J, std::conj(e));
            const cplx hat_r = std::pow(e, b.n) * series_with_tail(b.gR, b.J, e);
            const cplx rhs = 2.0 * pi * (1.0 - poly_g(b, e)) * composed_density(spec, lam);
            c.points.push_back(lam);
            c.residuals.push_back(rel_diff(hat_l + hat_r, rhs));
        }
        finish(c);
        rep.checks.push_back(c);
    }

    // Continuity across the circle: cubic extrapolation of the inside continuation to 1 + ε.
    {
        auto c = make_check("circle_continuity", 1e-5);
        const double eps = samples.circle_eps;
        for (double lam : samples.circle_lambda) {
            const cplx e = std::exp(I * lam);
            cplx g0 = 0.0, g1 = 0.0;
            for (int k = 1; k <= 4; ++k) {
                double wgt = 1.0;
                for (int l = 1; l <= 4; ++l)
                    if (l != k) wgt *= (1.0 + eps - (1.0 - l * eps)) / ((1.0 - k * eps) - (1.0 - l * eps));
                const GPair in = g_continuation(b, (1.0 - k * eps) * e);
                g0 += wgt * in.G0;
                g1 += wgt * in.G1;
            }
            const GPair out = g_series(b, (1.0 + eps) * e);
            c.points.push_back(lam);
            c.residuals.push_back(std::abs(g0 - out.G0) / std::abs(out.G0));
            c.residuals.push_back(std::abs(g1 - out.G1) / std::abs(out.G0));
        }
        finish(c);
        rep.checks.push_back(c);
    }

    // Boundary condition on (0, 1) for both Φ₀ and Φ₁.
    {
        auto c = make_check("boundary_condition", 1e-4);
        for (double t : samples.boundary_t) {
            const cplx qp = q_boundary_polylog(t, d, 1), qm = q_boundary_polylog(t, d, -1);
            const cplx ratio = qp / qm;
            const cplx tc(t, 0.0);
            const GPair up = to_phi(b, tc, g_continuation_boundary(b, t, 1));
            const GPair lo = to_phi(b, tc, g_continuation_boundary(b, t, -1));
            const GPair outside = phi_functions(b, cplx(1.0 / t, 0.0));
            const cplx factor = std::pow(t, b.n + 2 * q) * phi(1.0 / t) / phi(t) * (ratio - 1.0);
            c.points.push_back(t);
            // Both sides are differences of much larger terms, so those terms set the scale.
            const cplx lhs0 = up.G0 - ratio * lo.G0, rhs0 = factor * outside.G1;
            const cplx lhs1 = up.G1 - ratio * lo.G1, rhs1 = factor * outside.G0;
            const double s0 = std::abs(up.G0) + std::abs(ratio * lo.G0) + std::abs(rhs0);
            const double s1 = std::abs(up.G1) + std::abs(ratio * lo.G1) + std::abs(rhs1);
            c.residuals.push_back(std::abs(lhs0 - rhs0) / s0);
            c.residuals.push_back(std::abs(lhs1 - rhs1) / s1);
        }
        finish(c);
        rep.checks.push_back(c);
    }

    // Algebraic condition at the zeros of θ, their reciprocals and the zeros of Q.
    {
        auto c = make_check("algebraic_condition", 1e-6);
        std::vector<cplx> zs;
        for (cplx z : spec.ma_zeros()) {
            zs.push_back(z);
            zs.push_back(1.0 / z);
        }
        if (ctx.s0()) {
            zs.emplace_back(*ctx.s0(), 0.0);
            zs.emplace_back(1.0 / *ctx.s0(), 0.0);
        }
        for (cplx z : zs) {
            if (std::abs(z.imag()) == 0.0 && z.real() > 0.0) continue;
            if (std::abs(std::abs(z) - 1.0) < 1e-9) continue;
            const cplx first = phi_functions(b, z).G0 * phi(z);
            const cplx second = std::pow(z, b.n + 2 * q) * phi_functions(b, 1.0 / z).G1 * phi(1.0 / z);
            // The sum equals Q(z)·2π(1 − G(z))θ(z)z^qθ(1/z); its scale uses the size of Q's summands.
            const cplx lhs = 2.0 * pi * (1.0 - poly_g(b, z)) * spec.theta()(z) * std::pow(z, q) * spec.theta()(1.0 / z);
            const double q_scale = std::abs(1.0 / z - 2.0 + z) / (4.0 * pi) *
                                   (std::abs(polylog_mu(z, d)) + std::abs(polylog_mu(1.0 / z, d)));
            const double scale = std::abs(first) + std::abs(second) + std::abs(lhs) * q_scale;
            c.points.push_back(z.real());
            c.residuals.push_back(std::abs(first + second) / scale);
        }
        finish(c);
        rep.checks.push_back(c);
    }

    // Scaling condition near 0 along the negative axis.
    {
        auto c = make_check("scaling_condition", 0.05);
        cplx target = 2.0 * pi;
        for (cplx z : spec.ma_zeros()) target *= -1.0 / z;
        const cplx z(samples.scaling_z, 0.0);
        const GPair p = phi_functions(b, z);
        const cplx qz = q_extension(z, d);
        c.points = {samples.scaling_z};
        c.residuals = {std::abs(p.G0 / qz / target - 1.0)};
        finish(c);
        rep.checks.push_back(c);

        auto c1 = make_check("scaling_phi1_vanishes", 1.0);
        const cplx z2(0.1 * samples.scaling_z, 0.0);
        const double r1 = std::abs(p.G1 / qz), r2 = std::abs(phi_functions(b, z2).G1 / q_extension(z2, d));
        c1.points = {samples.scaling_z, z2.real()};
        c1.residuals = {r2 / r1};
        finish(c1);
        rep.checks.push_back(c1);
    }

    // Removability of the jump of the rearranged identity across ℝ₊.
    {
        auto c = make_check("removability", 1e-8);
        for (double t : samples.removable_t) {
            if (t == 1.0) continue;
            const cplx tc(t, 0.0);
            const cplx lhs = 2.0 * pi * (1.0 - poly_g(b, tc)) * spec.theta()(tc) * std::pow(tc, q) * spec.theta()(1.0 / tc);
            cplx r[2];
            for (int s = 0; s < 2; ++s) {
                const int side = s == 0 ? 1 : -1;
                cplx first, second;
                if (t < 1.0) {
                    first = to_phi(b, tc, g_continuation_boundary(b, t, side)).G0 * phi(tc);
                    second = std::pow(tc, b.n + 2 * q) * phi_functions(b, 1.0 / tc).G1 * phi(1.0 / tc);
                } else {
                    first = phi_functions(b, tc).G0 * phi(tc);
                    const double ti = 1.0 / t;
                    second = std::pow(tc, b.n + 2 * q) * to_phi(b, cplx(ti, 0.0), g_continuation_boundary(b, ti, -side)).G1 *
                             phi(ti);
                }
                r[s] = (first + second) / q_boundary_polylog(t, d, side);
            }
            c.points.push_back(t);
            c.residuals.push_back(std::max(rel_diff(r[0], r[1]), rel_diff(r[0], lhs)));
        }
        finish(c);
        rep.checks.push_back(c);
    }

    // Growth envelope near 0: |Φ₀(z)| |z| |log|z||^{1+2d} along z = −2^{−k} stays within a bounded band.
    {
        auto c = make_check("growth_envelope", 10.0);
        double lo = INFINITY, hi = 0.0;
        for (int k = 6; k <= 30; k += 4) {
            const double r = std::ldexp(1.0, -k);
            const double v = std::abs(phi_functions(b, cplx(-r, 0.0)).G0) * r * std::pow(std::abs(std::log(r)), 1.0 + 2.0 * d);
            c.points.push_back(-r);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        c.residuals = {hi / lo};
        finish(c);
        rep.checks.push_back(c);
    }
    return rep;
}

}  // namespace longmem
