#include "doctest.h"

#include "longmem/asympt.hpp"
#include "longmem/errors.hpp"
#include "longmem/predictor.hpp"

#include <cmath>
#include <random>

using namespace longmem;

namespace {

const AnalyticContext& context(double d) {
    static const AnalyticContext pos{ProcessSpec(0.25)};
    static const AnalyticContext neg{ProcessSpec(-0.25)};
    return d > 0 ? pos : neg;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("reflected zeros") {
    auto outside = reflect_zeros(ProcessSpec(-0.25, {1.0, -0.5}), std::nullopt);
    REQUIRE(outside.size() == 1);
    CHECK(rel(outside[0], 0.5) < 1e-14);
    auto inside = reflect_zeros(ProcessSpec(-0.25, {1.0, -2.0}), std::nullopt);
    REQUIRE(inside.size() == 1);
    CHECK(rel(inside[0], 0.5) < 1e-14);
    const double s0 = *context(0.25).s0();
    auto only_q = reflect_zeros(ProcessSpec(0.25), s0);
    REQUIRE(only_q.size() == 1);
    CHECK(rel(only_q[0], s0) < 1e-14);
    CHECK_THROWS_AS(reflect_zeros(ProcessSpec(-0.25, {1.0, 1.0}), std::nullopt), DomainError);
    for (cplx z : reflect_zeros(ProcessSpec(0.25, {1.0, 0.3, 0.5}), s0)) CHECK(std::abs(z) < 1.0);
}

// Reference values from an exact-arithmetic inverse in tests/oracles/oracles.py.
TEST_CASE("Vandermonde identities") {
    auto one = vandermonde_identities({0.5});
    CHECK(rel(one.eVe, -2.0) < 1e-14);
    CHECK(rel(one.oneVe, -1.0) < 1e-14);
    CHECK(rel(one.eVu, -2.0) < 1e-14);
    auto two = vandermonde_identities({0.5, -0.25});
    CHECK(rel(two.eVe_dense, -8.0) < 1e-10);
    CHECK(rel(two.oneVe_dense, -5.0) < 1e-10);
    CHECK(rel(two.eVu_dense, -1.6) < 1e-10);
    CHECK(two.max_error < 1e-10);
    std::mt19937 gen(5);
    std::uniform_real_distribution<double> radius(0.1, 0.9), angle(0.0, 6.283185307179586);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<cplx> zeta;
        for (int k = 0; k < 3; ++k) zeta.push_back(std::polar(radius(gen), angle(gen)));
        CHECK(vandermonde_identities(zeta).max_error < 1e-10);
    }
    CHECK_THROWS_AS(vandermonde_identities({0.5, 0.5}), DomainError);
}

TEST_CASE("predicted asymptotics") {
    auto p = predicted_asymptotics(ProcessSpec(0.25), 100, 0.8);
    CHECK(p.alpha == doctest::Approx(0.0025).epsilon(1e-15));
    CHECK(p.sigma2_limit == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(p.delta == doctest::Approx(0.8 * 0.0625 / 100).epsilon(1e-14));
    CHECK(p.sigma2 == doctest::Approx(p.sigma2_limit + p.delta).epsilon(1e-15));
    auto inv = predicted_asymptotics(ProcessSpec(0.25, {1.0, -2.0}), 100, 0.8);
    CHECK(inv.delta == doctest::Approx(4 * p.delta).epsilon(1e-14));
}

TEST_CASE("Levinson correlation approaches d/n") {
    auto trace = levinson(fgn_covariance(-0.25, 1 << 14), 1 << 14, Precision::double_double);
    CHECK(std::abs(1000 * trace.alpha(1000) + 0.25) < 0.01);
    double prev = 1.0;
    for (int n = 1 << 7; n <= 1 << 14; n *= 2) {
        const double gap = std::abs(n * trace.alpha(n) + 0.25);
        CHECK(gap < prev);
        CHECK(gap * n < 2.0);
        prev = gap;
    }
}

TEST_CASE("full algebraic systems reproduce Levinson") {
    for (double d : {-0.25, 0.25}) {
        const int n = 256;
        auto sol = solve_ab_systems(context(d), n);
        auto trace = levinson(fgn_covariance(d, n), n, Precision::double_double);
        CHECK(sol.sigma2 == doctest::Approx(trace.sigma_sq(n)).epsilon(5e-3));
        CHECK(sol.alpha == doctest::Approx(trace.alpha(n)).epsilon(5e-2));
        CHECK(sol.a_last + sol.b_last > 0.0);
        CHECK(std::abs(sol.a_last - sol.b_last) < sol.a_last + sol.b_last);
        CHECK(sol.imag_residue < 1e-8);
        CHECK(static_cast<int>(sol.a.size()) == context(d).q_of_d() + 1);
    }
}

TEST_CASE("second-order drift of a and b") {
    for (double d : {-0.25, 0.25}) {
        const auto& ctx = context(d);
        auto s512 = second_order_coefficients(solve_ab_systems(ctx, 512), ctx);
        auto s1024 = second_order_coefficients(solve_ab_systems(ctx, 1024), ctx);
        CHECK(s512.a_limit == doctest::Approx(d * (1 + d)));
        CHECK(s512.b_limit == doctest::Approx(d * (1 - d)));
        CHECK(std::abs(s512.a_coeff / s512.a_limit - 1.0) < 0.1);
        CHECK(std::abs(s512.b_coeff / s512.b_limit - 1.0) < 0.1);
        CHECK(std::abs(s1024.a_coeff - s1024.a_limit) <= std::abs(s512.a_coeff - s512.a_limit));
        CHECK(std::abs(s1024.b_coeff - s1024.b_limit) <= std::abs(s512.b_coeff - s512.b_limit));
    }
}

TEST_CASE("system assembly") {
    const auto& ctx = context(0.25);
    HorizonKernel kernel(256, ctx);
    auto sd = sd_evaluators(kernel);
    auto A = build_system(SystemKind::a_system, sd);
    auto B = build_system(SystemKind::b_system, sd);
    CHECK(A.matrix.rows() == 2);
    CHECK(A.nodes.size() == 1);
    CHECK(rel(A.nodes[0], 1.0 / *ctx.s0()) < 1e-12);
    CHECK(A.condition < 1e8);
    CHECK(B.condition < 1e8);
    CHECK(std::abs(A.beta - B.beta) < 1e-15);
}

TEST_CASE("trusted order threshold") {
    auto t = find_trusted_order(context(0.25), {8, 16, 32, 64, 128});
    REQUIRE(t.n0.has_value());
    CHECK(*t.n0 <= 128);
    CHECK(!t.tried.empty());
}
