#include "doctest.h"

#include "longmem/hilbert_verify.hpp"

#include <cmath>
#include <numbers>

using namespace longmem;
constexpr double pi = std::numbers::pi;

TEST_CASE("white-noise bundle") {
    const int n = 8, J = 64;
    CovarianceTable cov;
    cov.n_max = n + J + GeneratingBundle::tail_terms;
    cov.gamma.assign(cov.n_max + 1, 0.0);
    cov.gamma[0] = 1.0;
    auto trace = levinson(cov, n);
    auto b = build_bundle(ProcessSpec(-0.25), trace, cov, n, J);
    CHECK(b.gL[0] == doctest::Approx(1.0));
    CHECK(b.gR[0] == 0.0);
    CHECK(b.form_residual < 1e-15);
}

TEST_CASE("bundle sequences agree with the predictor") {
    const int n = 32;
    const ProcessSpec spec(0.25);
    auto b = build_bundle(spec, n, 512);
    auto cov = fgn_covariance(0.25, n + 600);
    auto trace = levinson(cov, n, Precision::double_double);
    CHECK(b.gL[0] == doctest::Approx(trace.sigma_sq(n)).epsilon(1e-10));
    CHECK(b.gR[0] == doctest::Approx(trace.alpha(n) * trace.sigma_sq(n)).epsilon(1e-10));
    CHECK(b.form_residual < 1e-9);
    // normal-equation residual with weights from an independent dense solve
    auto g = toeplitz_solve_direct(cov, n);
    auto residual = [&](long j) {
        double s = cov(j);
        for (int k = 1; k < n; ++k) s -= g[k - 1] * cov(j - k);
        return s;
    };
    CHECK(std::abs(residual(5)) < 1e-9 * cov(0));
    CHECK(std::abs(residual(-3) - b.gL[3]) < 1e-9 * cov(0));
    CHECK(std::abs(residual(n + 2) - b.gR[2]) < 1e-9 * cov(0));
}

TEST_CASE("series with an Euler-transform tail") {
    // Σ (−1)^m (m+1)^{−1/2} = (1 − √2)ζ(1/2), reference from mpmath.altzeta(0.5)
    std::vector<double> a(400);
    for (std::size_t m = 0; m < a.size(); ++m) a[m] = 1.0 / std::sqrt(m + 1.0);
    const cplx s = series_with_tail(a, 394, -1.0);
    CHECK(std::abs(s - 0.60489864342163) < 1e-10);
    std::vector<double> geo(100);
    for (std::size_t m = 0; m < geo.size(); ++m) geo[m] = std::pow(0.5, m);
    const cplx w{0.3, 0.8};
    CHECK(std::abs(series_with_tail(geo, 94, w) - 1.0 / (1.0 - 0.5 * w)) < 1e-14);
}

TEST_CASE("limits at infinity recover the predictor") {
    auto b = build_bundle(ProcessSpec(-0.25), 32);
    auto far = g_series(b, {1e6, 3.0});
    CHECK(std::abs(far.G0 - b.sigma2) < 1e-5 * b.sigma2);
    CHECK(std::abs(far.G1 / far.G0 - b.alpha) < 1e-5);
}

TEST_CASE("continuation across the unit circle") {
    auto b = build_bundle(ProcessSpec(-0.25), 32);
    for (double lam : {1.0, 2.0, 3.0}) {
        const double eps = 1e-6;
        auto outer = g_series(b, std::polar(1.0 + eps, lam));
        auto inner = g_continuation(b, std::polar(1.0 - eps, lam));
        CHECK(std::abs(outer.G0 - inner.G0) < 1e-5 * std::abs(outer.G0));
        CHECK(std::abs(outer.G1 - inner.G1) < 1e-5 * std::abs(outer.G0));
    }
}

TEST_CASE("Hilbert conditions") {
    struct Case {
        ProcessSpec spec;
        std::size_t algebraic_points;
    };
    const Case cases[] = {{ProcessSpec(-0.25), 0}, {ProcessSpec(0.25), 2}, {ProcessSpec(-0.25, {1.0, 0.5}), 2}};
    for (const auto& c : cases) {
        const AnalyticContext ctx{c.spec};
        auto b = build_bundle(c.spec, 32);
        auto report = check_hilbert_conditions(b, ctx);
        for (const auto& check : report.checks) {
            INFO(check.name);
            CHECK(check.pass);
        }
        CHECK(report.all_pass());
        CHECK(report.check("algebraic_condition").points.size() == c.algebraic_points);
        CHECK(report.check("boundary_condition").points.size() == 3);
    }
}

TEST_CASE("Phi1/Q vanishes at the origin") {
    const ProcessSpec spec(0.25);
    auto b = build_bundle(spec, 32);
    double prev = INFINITY;
    for (double x : {-1e-2, -1e-3, -1e-4}) {
        const double r = std::abs(phi_functions(b, x).G1 / q_extension(x, 0.25));
        CHECK(r < prev);
        prev = r;
    }
    // Φ₀/Q → 2π for θ = 1
    CHECK(std::abs(phi_functions(b, -1e-3).G0 / q_extension(-1e-3, 0.25) / (2 * pi) - 1.0) < 0.05);
}
