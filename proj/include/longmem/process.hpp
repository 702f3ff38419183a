#pragma once

#include "longmem/polynomial.hpp"

#include <vector>

namespace longmem {

// Memory parameter d with MA polynomial θ and AR polynomial φ (both with unit constant term).
class ProcessSpec {
public:
    // Validates: d in (-1/2, 1/2) \ {0}, θ(0) = φ(0) = 1, φ zero-free on the closed unit
    // disk, no common zeros. Unit-circle zeros of θ are accepted and flagged.
    ProcessSpec(double d, std::vector<double> theta = {1.0}, std::vector<double> phi = {1.0});

    double d() const { return d_; }
    const Polynomial& theta() const { return theta_; }
    const Polynomial& phi() const { return phi_; }
    int q() const { return theta_.degree(); }
    int p() const { return phi_.degree(); }
    const std::vector<cplx>& ma_zeros() const { return ma_zeros_; }
    const std::vector<cplx>& ar_zeros() const { return ar_zeros_; }
    bool has_unit_circle_ma_zero() const { return unit_circle_ma_zero_; }
    // q(d): q + 1 for d > 0, q for d < 0.
    int q_of_d() const { return q() + (d_ > 0 ? 1 : 0); }

private:
    double d_;
    Polynomial theta_;
    Polynomial phi_;
    std::vector<cplx> ma_zeros_;
    std::vector<cplx> ar_zeros_;
    bool unit_circle_ma_zero_ = false;
};

enum class CovarianceSource { fgn_exact, arima_filtered };

struct CovarianceTable {
    std::vector<double> gamma;  // γ(0..n_max)
    int n_max = 0;
    CovarianceSource source = CovarianceSource::fgn_exact;

    double operator()(long k) const { return gamma[static_cast<std::size_t>(k < 0 ? -k : k)]; }
};

// Throws DomainError unless d in (-1/2, 1/2) \ {0}.
void check_memory_parameter(double d);

// γ₀(k) = ½(|k+1|^{2d+1} − 2|k|^{2d+1} + |k−1|^{2d+1}).
double fgn_gamma(double d, long k);

CovarianceTable fgn_covariance(double d, int n_max);

// Power-series coefficients of θ(z)/φ(z), truncated where the geometric tail bound
// drops below tol relative to the retained absolute sum.
std::vector<double> impulse_response(const ProcessSpec& spec, double tol = 1e-14);

// γ(k) = Σ_{i,j} ψ_i ψ_j γ₀(k+i−j).
CovarianceTable arima_covariance(const ProcessSpec& spec, int n_max, double tol = 1e-14);

}  // namespace longmem
