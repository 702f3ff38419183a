#pragma once

#include "longmem/polynomial.hpp"
#include "longmem/process.hpp"

#include <optional>
#include <vector>

namespace longmem {

// μ(z) = Σ_{k≥1} k^{2d+1} z^k continued to ℂ \ [1, ∞).
cplx polylog_mu(cplx z, double d);

// Boundary values μ^±(T) for T > 1, side = +1 (upper half-plane) or −1 (lower).
cplx polylog_mu_boundary(double T, double d, int side);

// Q(z) = (1/4π)(z^{−1} − 2 + z)(μ(z) + μ(1/z)) on ℂ \ ℝ₊.
cplx q_extension(cplx z, double d);

// Boundary values Q^±(t), t ∈ ℝ₊ \ {0, 1}, assembled from polylog boundary values.
cplx q_boundary_polylog(double t, double d, int side);

// Q^+(t) for t > 1 from the A⁺/B representation.
cplx q_plus(double t, double d);

// Q^+(e^L) for L > 0; avoids forming t when t is within rounding of 1.
cplx q_plus_log(double L, double d);

// η(t) = arg Q^+(t) on (0, 1), obtained as −arg Q^+(1/t).
double eta(double t, double d);

// η(e^{−s}) for s > 0.
double eta_log(double s, double d);

// Zero of μ(s) + μ(1/s) on (−1, 0); exists only for d > 0.
double find_s0(double d);

struct AnalyticOptions {
    int order = 16;            // Gauss–Legendre nodes per panel on the η grid
    double ratio = 0.25;       // geometric grading ratio toward s = 0
    double finest = 1e-15;     // smallest graded panel edge in s
    double sigma_max = 64.0;   // s-range of the η grid (t >= e^{−sigma_max})
    double width = 1.0;        // panel width on [1, sigma_max]
};

// Precomputed η values from a cache, keyed by d and grid options.
struct AnalyticCache {
    std::vector<double> eta_values;
    std::optional<double> s0;
};

// Everything the Hilbert-problem solution needs for one process specification.
class AnalyticContext {
public:
    explicit AnalyticContext(const ProcessSpec& spec, AnalyticOptions options = {},
                             const AnalyticCache* cache = nullptr);

    const ProcessSpec& spec() const { return spec_; }
    double d() const { return spec_.d(); }
    const AnalyticOptions& options() const { return options_; }
    int q_of_d() const { return spec_.q_of_d(); }
    const std::optional<double>& s0() const { return s0_; }
    double sigma0_sq() const { return sigma0_sq_; }
    double psi0() const { return psi0_; }

    // η grid in the variable s = −log t.
    const std::vector<double>& s_nodes() const { return s_; }
    const std::vector<double>& s_weights() const { return w_; }
    const std::vector<double>& tau_nodes() const { return tau_; }
    const std::vector<double>& eta_values() const { return eta_; }

    // (1/π)∫_0^1 η(τ)/(τ − z) dτ for z off [0, 1].
    cplx log_x0(cplx z) const;
    // (1/π) PV∫_0^1 η(τ)/(τ − t) dτ for t = e^{−s}.
    double log_x0_principal(double s) const;
    // PV∫_0^1 η(τ)/(τ − t) dτ for t = e^{−s}, given η(t).
    double principal_integral(double s, double eta_s) const;
    // ψ(z) from the circle Cauchy integral of log f₀.
    cplx psi(cplx z) const;

private:
    double eta_derivative(double s) const;
    double pv_sum(double s, double eta_s, double t) const;

    ProcessSpec spec_;
    AnalyticOptions options_;
    std::vector<double> s_, w_, tau_, eta_;
    std::vector<double> lambda_, lambda_w_, log_f0_;
    std::optional<double> s0_;
    double sigma0_sq_ = 0.0;
    double psi0_ = 0.0;
};

// X₀(z) = exp((1/π)∫_0^1 η(τ)/(τ − z) dτ), z ∉ [0, 1].
cplx x0(cplx z, const AnalyticContext& ctx);

// Boundary values X₀^±(t) on (0, 1) by the Sokhotski–Plemelj formulas.
cplx x0_boundary(double t, int side, const AnalyticContext& ctx);

// X(z) = X₀(z)/z for d > 0 and X₀(z) for d < 0.
cplx x_factor(cplx z, const AnalyticContext& ctx);
cplx x_factor_boundary(double t, int side, const AnalyticContext& ctx);

// ψ(z) = exp(−(1/2πi)∮ log Q(ζ)/(ζ − z) dζ), |z| ≠ 1.
cplx psi_outer(cplx z, const AnalyticContext& ctx);

// Kernel h(s) = h̃(e^{−s}) in real form (principal-value representation).
double h_kernel(double s, const AnalyticContext& ctx);

// The same kernel assembled from complex boundary values of X; its imaginary part is rounding.
cplx h_kernel_complex(double s, const AnalyticContext& ctx);

}  // namespace longmem
