#pragma once

#include "longmem/analytic.hpp"
#include "longmem/predictor.hpp"
#include "longmem/process.hpp"

#include <string>
#include <vector>

namespace longmem {

// g_n and the auxiliary sequences g^L_n(j), j ≤ 0, and g^R_n(j), j ≥ n, of an order-n predictor.
struct GeneratingBundle {
    ProcessSpec spec;
    int n = 0;
    int J = 0;                         // terms summed explicitly in each series
    std::vector<double> g{};            // g[k−1] = g_n(k), k = 1..n−1
    std::vector<double> gL{};           // gL[m] = g^L_n(−m), m = 0..J+tail_terms
    std::vector<double> gR{};           // gR[m] = g^R_n(n+m)
    double sigma2 = 0.0;               // Levinson σ²(n)
    double alpha = 0.0;                // Levinson α(n)
    double form_residual = 0.0;        // max normal-equation residual over sampled j, relative to γ(0)

    static constexpr int tail_terms = 6;   // differences used by the Euler-transform tail
};

// Builds the bundle from a Levinson trace of order exactly n; cov must cover lag n + J + tail_terms.
GeneratingBundle build_bundle(const ProcessSpec& spec, const PredictorTrace& trace, const CovarianceTable& cov,
                              int n, int J);
// Convenience: covariance and Levinson trace computed internally.
GeneratingBundle build_bundle(const ProcessSpec& spec, int n, int J = 4096);

// Σ_{m≥0} a_m w^m for |w| ≤ 1, w ≠ 1: explicit sum of the first `explicit_terms` terms plus an
// Euler-transform tail built from the remaining values. Throws ConvergenceError when the tail
// does not settle.
cplx series_with_tail(const std::vector<double>& a, int explicit_terms, cplx w);

struct GPair {
    cplx G0, G1;
};

// G₀, G₁ by their series, |z| ≥ 1 (z ≠ 1).
GPair g_series(const GeneratingBundle& b, cplx z);
// G₀, G₁ inside the disk off [0, 1) from Q and the series at 1/z.
GPair g_continuation(const GeneratingBundle& b, cplx z);
// Upper (side = +1) or lower boundary values of the continuation on (0, 1).
GPair g_continuation_boundary(const GeneratingBundle& b, double t, int side);
// Dispatches on |z|.
GPair g_functions(const GeneratingBundle& b, cplx z);

// Φ₀ = z^q φ(1/z) G₀, Φ₁ = z^q φ(1/z) G₁.
GPair phi_functions(const GeneratingBundle& b, cplx z);

struct ConditionCheck {
    std::string name;
    std::vector<double> points;
    std::vector<double> residuals;
    double tolerance = 0.0;
    bool pass = false;
};

struct HilbertReport {
    int n = 0;
    double d = 0.0;
    std::vector<ConditionCheck> checks;
    bool all_pass() const;
    const ConditionCheck& check(const std::string& name) const;
};

struct HilbertSamples {
    std::vector<double> boundary_t{0.3, 0.5, 0.7};
    std::vector<double> circle_lambda{1.0, 2.0, 3.0};
    std::vector<double> fourier_lambda{0.5, 1.5, 2.5};
    std::vector<double> removable_t{0.3, 0.7, 1.5, 3.0};
    double circle_eps = 1e-3;
    double scaling_z = -1e-3;
    double infinity_z = 1e3;
};

HilbertReport check_hilbert_conditions(const GeneratingBundle& b, const AnalyticContext& ctx,
                                       const HilbertSamples& samples = {});

}  // namespace longmem
