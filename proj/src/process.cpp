#include "longmem/process.hpp"

#include "longmem/errors.hpp"

#include <algorithm>
#include <cmath>

namespace longmem {

void check_memory_parameter(double d) {
    if (!(d > -0.5 && d < 0.5) || d == 0.0)
        throw DomainError("memory parameter d must lie in (-1/2, 1/2) and differ from 0");
}

ProcessSpec::ProcessSpec(double d, std::vector<double> theta, std::vector<double> phi)
    : d_(d), theta_(std::move(theta)), phi_(std::move(phi)) {
    check_memory_parameter(d);
    if (theta_.coeffs()[0] != 1.0 || phi_.coeffs()[0] != 1.0)
        throw DomainError("theta(0) and phi(0) must equal 1");
    ma_zeros_ = theta_.roots();
    ar_zeros_ = phi_.roots();
    for (const cplx& z : ar_zeros_)
        if (std::abs(z) <= 1.0 + 1e-12) throw DomainError("phi has a zero in the closed unit disk");
    for (const cplx& z : ma_zeros_) {
        if (std::abs(std::abs(z) - 1.0) <= 1e-10) unit_circle_ma_zero_ = true;
        for (const cplx& w : ar_zeros_)
            if (std::abs(z - w) <= 1e-10 * std::max(1.0, std::abs(z)))
                throw DomainError("theta and phi share a zero");
    }
}

namespace {

// Binomial-series form of the second difference for k >= 2:
// γ₀(k) = Σ_{i≥1} C(a, 2i) k^{a−2i}, a = 2d+1. Converges for k > 1 without cancellation.
double fgn_gamma_series(double d, double k) {
    const double a = 2.0 * d + 1.0;
    const double x2 = 1.0 / (k * k);
    double binom = a * (a - 1.0) / 2.0;  // C(a, 2)
    double power = std::pow(k, a) * x2;
    double sum = 0.0;
    for (int i = 1; i < 200; ++i) {
        const double term = binom * power;
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
        const double m = 2.0 * i;
        binom *= (a - m) * (a - m - 1.0) / ((m + 1.0) * (m + 2.0));
        power *= x2;
    }
    return sum;
}

}  // namespace

double fgn_gamma(double d, long k) {
    const double a = 2.0 * d + 1.0;
    const double kk = static_cast<double>(k < 0 ? -k : k);
    if (kk == 0.0) return 1.0;
    if (kk < 8.0) return 0.5 * (std::pow(kk + 1.0, a) - 2.0 * std::pow(kk, a) + std::pow(kk - 1.0, a));
    return fgn_gamma_series(d, kk);
}

CovarianceTable fgn_covariance(double d, int n_max) {
    check_memory_parameter(d);
    if (n_max < 1) throw DomainError("n_max must be at least 1");
    CovarianceTable t;
    t.n_max = n_max;
    t.source = CovarianceSource::fgn_exact;
    t.gamma.resize(n_max + 1);
    for (int k = 0; k <= n_max; ++k) t.gamma[k] = fgn_gamma(d, k);
    return t;
}

std::vector<double> impulse_response(const ProcessSpec& spec, double tol) {
    const auto& th = spec.theta().coeffs();
    const auto& ph = spec.phi().coeffs();
    const int p = spec.p();
    const int q = spec.q();
    double r = 0.0;  // largest inverse-root modulus of φ
    for (const cplx& z : spec.ar_zeros()) r = std::max(r, 1.0 / std::abs(z));
    if (r >= 1.0 / (1.0 + 1e-12)) throw ConvergenceError("phi has a root too close to the unit circle");

    std::vector<double> psi;
    double abs_sum = 0.0;
    const long cap = 10'000'000;
    for (long j = 0; j < cap; ++j) {
        double v = j <= q ? th[j] : 0.0;
        for (int i = 1; i <= std::min<long>(j, p); ++i) v -= ph[i] * psi[j - i];
        psi.push_back(v);
        abs_sum += std::abs(v);
        if (p == 0) {
            if (j >= q) return psi;
            continue;
        }
        if (j < std::max(p, q)) continue;
        // The last p values seed the homogeneous recursion, whose solution decays like
        // j^{p-1} r^j; the 2^p factor pads the geometric sum for that polynomial growth.
        double window = 0.0;
        for (int i = 0; i < p; ++i) window = std::max(window, std::abs(psi[j - i]));
        const double bound = window * p * std::pow(2.0, p) * r / (1.0 - r);
        if (bound < tol * abs_sum) return psi;
    }
    throw ConvergenceError("impulse response truncation exceeded its budget");
}

CovarianceTable arima_covariance(const ProcessSpec& spec, int n_max, double tol) {
    if (n_max < 1) throw DomainError("n_max must be at least 1");
    const std::vector<double> psi = impulse_response(spec, tol);
    const long J = static_cast<long>(psi.size()) - 1;
    // c(m) = Σ_i ψ_i ψ_{i+m}, so γ(k) = Σ_m c(m) γ₀(k−m).
    std::vector<double> c(J + 1, 0.0);
    for (long m = 0; m <= J; ++m)
        for (long i = 0; i + m <= J; ++i) c[m] += psi[i] * psi[i + m];
    std::vector<double> g0(n_max + J + 1);
    for (long k = 0; k <= n_max + J; ++k) g0[k] = fgn_gamma(spec.d(), k);
    auto g0_at = [&](long k) { return g0[static_cast<std::size_t>(k < 0 ? -k : k)]; };

    CovarianceTable t;
    t.n_max = n_max;
    t.source = CovarianceSource::arima_filtered;
    t.gamma.resize(n_max + 1);
    for (long k = 0; k <= n_max; ++k) {
        double s = c[0] * g0_at(k);
        for (long m = 1; m <= J; ++m) s += c[m] * (g0_at(k - m) + g0_at(k + m));
        t.gamma[k] = s;
    }
    return t;
}

}  // namespace longmem
