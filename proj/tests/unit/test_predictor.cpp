#include "doctest.h"

#include "longmem/predictor.hpp"
#include "longmem/spectral.hpp"

#include <cmath>

using namespace longmem;

TEST_CASE("first-order correlation equals lag-one covariance") {
    auto trace = levinson(fgn_covariance(0.25, 4), 4);
    CHECK(trace.alpha(1) == doctest::Approx(0.41421356237309505).epsilon(1e-14));
    CHECK(trace.sigma_sq(1) == doctest::Approx(1.0));
    CHECK(trace.sigma_sq(2) == doctest::Approx(1.0 - trace.alpha(1) * trace.alpha(1)).epsilon(1e-14));
}

TEST_CASE("Levinson agrees with a dense solve") {
    const int n = 64;
    auto cov = fgn_covariance(-0.25, n);
    auto trace = levinson(cov, n);
    auto g = toeplitz_solve_direct(cov, n);
    REQUIRE(g.size() == trace.weights_final.size());
    for (std::size_t k = 0; k < g.size(); ++k) CHECK(std::abs(g[k] - trace.weights_final[k]) < 1e-10);
    auto [s2, a] = prediction_error_and_corr(cov, g, n);
    CHECK(std::abs(s2 - trace.sigma_sq(n)) < 1e-10);
    CHECK(std::abs(a - trace.alpha(n)) < 1e-10);
}

TEST_CASE("prediction error product identity") {
    auto trace = levinson(fgn_covariance(0.3, 200), 200);
    for (int n = 1; n < 200; ++n) {
        CHECK(trace.sigma_sq(n + 1) == doctest::Approx(trace.sigma_sq(n) * (1 - trace.alpha(n) * trace.alpha(n))).epsilon(1e-12));
        CHECK(std::abs(trace.alpha(n)) < 1.0);
    }
}

TEST_CASE("double-double and double precision agree") {
    auto cov = fgn_covariance(0.4, 1024);
    auto lo = levinson(cov, 1024);
    auto hi = levinson(cov, 1024, Precision::double_double);
    CHECK(std::abs(lo.alpha(1024) - hi.alpha(1024)) < 1e-10);
    CHECK(lo.sigma_sq(1024) == doctest::Approx(hi.sigma_sq(1024)).epsilon(1e-12));
}

TEST_CASE("alpha(n) ~ d/n for fGn") {
    for (double d : {-0.25, 0.25}) {
        auto trace = levinson(fgn_covariance(d, 4096), 4096);
        CHECK(std::abs(4096 * trace.alpha(4096) - d) < 0.02);
    }
}

TEST_CASE("sigma^2(n) decreases toward the Szego constant") {
    const double d = 0.25;
    auto trace = levinson(fgn_covariance(d, 1 << 14), 1 << 14, Precision::double_double);
    for (int n = 1; n < 1 << 14; n *= 2) CHECK(trace.sigma_sq(2 * n) <= trace.sigma_sq(n));
    const double s0 = szego_constants(ProcessSpec(d)).sigma0_sq;
    CHECK(std::abs(trace.sigma_sq(1 << 14) / s0 - 1.0) < 0.01);
}
