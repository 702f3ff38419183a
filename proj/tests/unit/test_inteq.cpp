#include "doctest.h"

#include "longmem/inteq.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace longmem;
constexpr double pi = std::numbers::pi;

namespace {

const AnalyticContext& context() {
    static const AnalyticContext ctx{ProcessSpec(0.25)};
    return ctx;
}

double weighted_distance(const InteqSolution& a, const InteqSolution& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        num += a.weights[i] * std::pow(a.values[i] - b.values[i], 2);
        den += a.weights[i] * a.values[i] * a.values[i];
    }
    return std::sqrt(num / den);
}

double free_term_distance(const InteqSolution& u) {
    double s = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i)
        s += u.weights[i] * std::pow(u.values[i] - std::exp(u.j * u.nodes[i]), 2);
    return std::sqrt(s);
}

}  // namespace

// Reference values from a dense double-precision Nyström solve in tests/oracles/oracles.py.
TEST_CASE("q1 and p1 against the reference solution") {
    const double ts[] = {0.01, 0.1, 1.0, 10.0, 100.0};
    const double q1_ref[] = {3.10593227980943, 1.8038996576541091, 1.2015745275023146, 1.0290063793839508,
                             1.0030991186328548};
    const double p1_ref[] = {0.42861722057023199, 0.67291537793756406, 0.89327795513936725, 0.98297134595697844,
                             0.9981450972307172};
    for (double d : {0.25, -0.25}) {
        auto [q1, p1] = solve_q1_p1(d);
        for (int i = 0; i < 5; ++i) {
            // q₁ for −d is p₁ for d
            const double qr = d > 0 ? q1_ref[i] : p1_ref[i];
            const double pr = d > 0 ? p1_ref[i] : q1_ref[i];
            CHECK(evaluate_qp(q1, d, ts[i]) == doctest::Approx(qr).epsilon(1e-9));
            CHECK(evaluate_qp(p1, d, ts[i]) == doctest::Approx(pr).epsilon(1e-9));
        }
        CHECK(q1.residual < 1e-10);
        CHECK(p1.residual < 1e-10);
        CHECK(evaluate_qp(q1, d, 1e6) == doctest::Approx(1.0).epsilon(1e-5));
    }
}

TEST_CASE("vanishing kernel for small d") {
    auto [q1, p1] = solve_q1_p1(1e-3);
    for (double t : {0.1, 1.0, 10.0}) {
        CHECK(std::abs(evaluate_qp(q1, 1e-3, t) - 1.0) < 1e-2);
        CHECK(std::abs(evaluate_qp(p1, 1e-3, t) - 1.0) < 1e-2);
    }
}

TEST_CASE("lambda0 and mu0 closed forms") {
    for (double d : {-0.4, -0.25, -0.1, 0.1, 0.25, 0.4}) {
        auto lm = lambda_mu_constants(d);
        CHECK(lm.lambda0_closed == doctest::Approx(pi * d * (1 + d) / std::sin(pi * d)).epsilon(1e-15));
        CHECK(lm.mu0_closed == doctest::Approx(pi * d * (1 - d) / std::sin(pi * d)).epsilon(1e-15));
        CHECK(lm.rel_err < 1e-4);
    }
    auto lm = lambda_mu_constants(0.25);
    CHECK(lm.lambda0_numeric == doctest::Approx(1.38840).epsilon(1e-5));
    CHECK(lm.mu0_numeric == doctest::Approx(0.83304).epsilon(1e-5));
    CHECK(std::abs(lambda_mu_constants(0.01).lambda0_numeric - 1.01) < 1e-3);
}

TEST_CASE("tail limit of q1 reproduces lambda0") {
    for (double d : {-0.25, 0.25}) {
        auto [q1, p1] = solve_q1_p1(d);
        auto scaled = [&](double t) { return t * (evaluate_qp(q1, d, t) - 1.0) * pi / std::sin(pi * d); };
        const double v2 = scaled(1e2), v3 = scaled(1e3);
        const double extrapolated = (10 * v3 - v2) / 9;
        CHECK(extrapolated == doctest::Approx(pi * d * (1 + d) / std::sin(pi * d)).epsilon(1e-4));
    }
}

TEST_CASE("Neumann and Nystrom routes agree") {
    for (double d : {-0.25, 0.25}) {
        auto [qa, pa] = solve_q1_p1(d, SolverRoute::nystrom);
        auto [qb, pb] = solve_q1_p1(d, SolverRoute::neumann);
        CHECK(weighted_distance(qa, qb) < 1e-9);
        CHECK(weighted_distance(pa, pb) < 1e-9);
        CHECK(qb.contraction <= 1.0 - (0.5 - 0.5 * std::abs(std::sin(pi * d))));
    }
    HorizonKernel kernel(64, context());
    for (int j : {0, 1}) {
        auto [ua, wa] = solve_uw(j, kernel, SolverRoute::nystrom);
        auto [ub, wb] = solve_uw(j, kernel, SolverRoute::neumann);
        CHECK(weighted_distance(ua, ub) < 1e-9);
        CHECK(weighted_distance(wa, wb) < 1e-9);
        CHECK(ua.residual < 1e-10);
        CHECK(wa.residual < 1e-10);
    }
}

TEST_CASE("scaling law q_n(t/n) = q1(t)") {
    for (double d : {-0.25, 0.25}) {
        auto [q1, p1] = solve_q1_p1(d);
        for (int n : {16, 64, 256}) {
            auto [qn, pn] = solve_qn_pn(d, n);
            for (double t : {0.05, 0.5, 5.0, 50.0}) {
                CHECK(evaluate_qp(qn, d, t / n) == doctest::Approx(evaluate_qp(q1, d, t)).epsilon(1e-8));
                CHECK(evaluate_qp(pn, d, t / n) == doctest::Approx(evaluate_qp(p1, d, t)).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("u - e^{jt} shrinks like n^{-1/2}") {
    for (int j : {0, 1}) {
        const double a = free_term_distance(solve_uw(j, 128, context()).first);
        const double b = free_term_distance(solve_uw(j, 512, context()).first);
        CHECK(b / a < 0.6);
    }
}

TEST_CASE("contraction of the horizon operator") {
    const double eps = 0.5 - 0.5 * std::sin(pi * 0.25);
    HorizonKernel kernel(64, context());
    ContractionProbe probe(kernel);
    CHECK(probe.operator_norm() <= 1.0 - eps);
    std::mt19937 gen(3);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> f(probe.cells());
        for (double& v : f) v = normal(gen);
        CHECK(probe.ratio(f) <= 1.0 - eps);
    }
}

TEST_CASE("S/D first-order expansion at z = -1") {
    const double d = 0.25;
    const double limit = -d * (1 + d) / 2;  // (sin πd/π)λ₀/(z−1) with z = −1
    const double lambda0 = pi * d * (1 + d) / std::sin(pi * d);
    const double c = std::sin(pi * d) / pi;
    double prev_err = 1.0, prev_rem = 0.0;
    for (int n : {128, 256, 512, 1024}) {
        HorizonKernel kernel(n, context());
        auto [u, w] = solve_uw(0, kernel);
        const double S = sd_evaluate(-1.0, kernel, u, w).S.real();
        const double err = std::abs(n * (S - 1.0) - limit);
        CHECK(err < prev_err);
        prev_err = err;
        const double rem = n * static_cast<double>(n) * std::abs(S - 1.0 - c * lambda0 / (-2.0 * n));
        if (prev_rem > 0.0) CHECK(rem < 1.5 * prev_rem);
        prev_rem = rem;
    }
    CHECK(prev_err < 2e-3);
}

TEST_CASE("S/D derivatives match finite differences") {
    HorizonKernel kernel(256, context());
    auto [u, w] = solve_uw(1, kernel);
    for (cplx z : {cplx{-1.0, 0.0}, cplx{2.0, 1.0}, cplx{-0.3, 0.5}}) {
        const double h = 1e-5;
        auto plus = sd_evaluate(z + h, kernel, u, w), minus = sd_evaluate(z - h, kernel, u, w);
        auto exact = sd_derivative(z, kernel, u, w);
        CHECK(std::abs(exact.S - (plus.S - minus.S) / (2 * h)) < 1e-7 * std::abs(exact.S));
        CHECK(std::abs(exact.D - (plus.D - minus.D) / (2 * h)) < 1e-7 * std::abs(exact.D));
    }
}

TEST_CASE("evaluators approach the free terms for large n") {
    HorizonKernel kernel(1 << 14, context());
    auto sd = sd_evaluators(kernel);
    REQUIRE(sd.u.size() == 2);
    auto values = sd.at(-1.0);
    CHECK(std::abs(values[0].S - 1.0) < 1e-4);
    CHECK(std::abs(values[1].D + 1.0) < 1e-4);
    CHECK(kernel.sup_he() < 1.0 + 1e-12);
}
