#include "doctest.h"

#include "longmem/errors.hpp"
#include "longmem/process.hpp"
#include "longmem/quadrature.hpp"
#include "longmem/spectral.hpp"

#include <cmath>
#include <numbers>

using namespace longmem;
constexpr double pi = std::numbers::pi;

TEST_CASE("fgn density values") {
    CHECK(fgn_density(0.25, 1.0) == doctest::Approx(0.14161568617034399).epsilon(1e-10));
    CHECK(composed_density(ProcessSpec(0.25), 1.3) == doctest::Approx(fgn_density(0.25, 1.3)).epsilon(1e-15));
    CHECK(composed_density(ProcessSpec(0.25, {1.0}, {1.0, -0.5}), pi / 2) ==
          doctest::Approx(0.085480259459843434).epsilon(1e-10));
    const ProcessSpec unit_zero(0.25, {1.0, 1.0});
    CHECK(composed_density(unit_zero, pi - 1e-6) < 1e-11);
    CHECK_THROWS_AS(composed_density(unit_zero, pi), DomainError);
}

TEST_CASE("tail truncation is converged") {
    for (double lam : {1e-3, 0.5, 2.0, pi})
        CHECK(fgn_density(-0.3, lam, 64) == doctest::Approx(fgn_density(-0.3, lam, 512)).epsilon(1e-10));
}

TEST_CASE("flat density has unit geometric mean") {
    const double s = szego_geometric_mean([](double) { return -std::log(2 * pi); }, 0.0);
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Szego constants") {
    CHECK(szego_constants(ProcessSpec(-0.25)).sigma0_sq == doctest::Approx(0.86936879373921671).epsilon(1e-11));
    CHECK(szego_constants(ProcessSpec(0.25)).sigma0_sq == doctest::Approx(0.79613378174998131).epsilon(1e-11));
    auto inv = szego_constants(ProcessSpec(0.25, {1.0, -2.0}));
    CHECK(inv.sigma_sq == doctest::Approx(4 * inv.sigma0_sq).epsilon(1e-14));
    auto c = szego_constants(ProcessSpec(0.25, {1.0, 0.5}, {1.0, -0.4}));
    CHECK(c.sigma_sq == doctest::Approx(c.sigma0_sq).epsilon(1e-14));
    CHECK(fgn_constant(0.25) == doctest::Approx(std::tgamma(2.5) * std::cos(pi / 4) / (2 * pi)));
}

TEST_CASE("density integrates to the variance") {
    for (auto spec : {ProcessSpec(0.25), ProcessSpec(-0.25, {1.0, 0.4}), ProcessSpec(0.25, {1.0}, {1.0, -0.5})}) {
        auto edges = join_edges(geometric_edges(0.0, 0.5, 0.25, 1e-14), uniform_edges(0.5, pi, 0.25));
        auto rule = composite(edges, 16);
        const double integral = 2 * rule.integrate([&](double l) { return composed_density(spec, l); });
        CHECK(integral == doctest::Approx(arima_covariance(spec, 1)(0)).epsilon(1e-7));
    }
}

TEST_CASE("sigma0^2 is continuous in d") {
    const double grid[] = {-0.45, -0.35, -0.25, -0.15, -0.05, 0.05, 0.15, 0.25, 0.35, 0.45};
    for (double d : grid) {
        const double s = szego_constants(ProcessSpec(d)).sigma0_sq;
        const double left = szego_constants(ProcessSpec(d - 1e-4)).sigma0_sq;
        const double right = szego_constants(ProcessSpec(d + 1e-4)).sigma0_sq;
        CHECK(s > 0.0);
        CHECK(s <= 1.0);
        CHECK(std::abs(left - s) < 1e-3);
        CHECK(std::abs(right - s) < 1e-3);
        // second difference is O(h²) for a smooth curve
        CHECK(std::abs(left + right - 2 * s) < 1e-6);
    }
}
