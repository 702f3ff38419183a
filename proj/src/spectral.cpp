#include "longmem/spectral.hpp"

#include "longmem/errors.hpp"
#include "longmem/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace longmem {

namespace {

constexpr double pi = std::numbers::pi;

// Σ_{k>K} (2πk + λ)^{−a} by Euler–Maclaurin about k = K.
double power_tail(double a, double lambda, int K) {
    const double x = 2.0 * pi * K + lambda;
    const double two_pi = 2.0 * pi;
    // Derivatives of g(k) = (2πk+λ)^{−a} with respect to k.
    auto deriv = [&](int m) {
        double c = 1.0;
        for (int i = 0; i < m; ++i) c *= -(a + i) * two_pi;
        return c * std::pow(x, -a - m);
    };
    const double integral = std::pow(x, 1.0 - a) / (two_pi * (a - 1.0));
    return integral - 0.5 * deriv(0) - deriv(1) / 12.0 + deriv(3) / 720.0 - deriv(5) / 30240.0;
}

}  // namespace

double fgn_constant(double d) { return std::tgamma(2.0 * d + 2.0) * std::cos(pi * d) / (2.0 * pi); }

double fgn_density(double d, double lambda, int k_terms) {
    check_memory_parameter(d);
    if (k_terms < 1) throw DomainError("k_terms must be positive");
    double l = std::remainder(lambda, 2.0 * pi);
    if (l == 0.0) throw DomainError("fGn density is singular at lambda = 0");
    l = std::abs(l);
    const double a = 2.0 * d + 2.0;
    double s = std::pow(l, -a);
    for (int k = 1; k <= k_terms; ++k) s += std::pow(2.0 * pi * k + l, -a) + std::pow(2.0 * pi * k - l, -a);
    s += power_tail(a, l, k_terms) + power_tail(a, -l, k_terms);
    const double chord2 = 4.0 * std::sin(0.5 * l) * std::sin(0.5 * l);
    return fgn_constant(d) * chord2 * s;
}

double composed_density(const ProcessSpec& spec, double lambda) {
    const cplx e = std::polar(1.0, lambda);
    const cplx th = spec.theta()(e);
    const cplx ph = spec.phi()(e);
    if (spec.has_unit_circle_ma_zero()) {
        for (const cplx& z : spec.ma_zeros())
            if (std::abs(e - z) < 1e-14) throw DomainError("lambda coincides with a unit-circle MA zero");
    }
    return std::norm(th / ph) * fgn_density(spec.d(), lambda);
}

double szego_geometric_mean(const std::function<double(double)>& log_density, double log_power,
                            const std::vector<double>& extra_log_points) {
    // Panels graded geometrically toward λ = 0, π and any interior log singularity.
    std::vector<double> marks{0.0};
    for (double p : extra_log_points)
        if (p > 0.0 && p < pi) marks.push_back(p);
    marks.push_back(pi);
    std::sort(marks.begin(), marks.end());
    std::vector<double> edges{0.0};
    for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
        const double a = marks[i], b = marks[i + 1];
        const double h = 0.5 * (b - a);
        const double floor_a = std::max(1e-24 * h, 1e-14 * a);
        const double floor_b = std::max(1e-24 * h, 1e-14 * b);
        const std::vector<double> left = geometric_edges(0.0, h, 0.25, floor_a);
        const std::vector<double> right = geometric_edges(0.0, h, 0.25, floor_b);
        for (std::size_t k = 1; k < left.size(); ++k) edges.push_back(a + left[k]);
        for (std::size_t k = right.size() - 1; k-- > 0;) edges.push_back(b - right[k]);
    }
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    const Rule rule = composite(edges, 20);
    double integral = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double l = rule.x[i];
        integral += rule.w[i] * (log_density(l) - log_power * std::log(l));
    }
    integral += log_power * (pi * std::log(pi) - pi);
    return 2.0 * pi * std::exp(integral / pi);
}

SpectralConstants szego_constants(const ProcessSpec& spec) {
    const double d = spec.d();
    SpectralConstants c;
    c.c_d = fgn_constant(d);
    c.sigma0_sq = szego_geometric_mean([d](double l) { return std::log(fgn_density(d, l)); }, -2.0 * d);
    cplx prod = 1.0;
    for (const cplx& z : spec.ma_zeros())
        if (std::abs(z) < 1.0 - 1e-10) prod /= z * z;
    c.sigma_sq = c.sigma0_sq * prod.real();
    return c;
}

}  // namespace longmem
