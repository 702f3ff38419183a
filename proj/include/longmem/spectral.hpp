#pragma once

#include "longmem/process.hpp"

#include <functional>

namespace longmem {

struct SpectralConstants {
    double sigma0_sq = 0.0;  // Szegő–Kolmogorov one-step error of the fGn density
    double sigma_sq = 0.0;   // limit for the composed process
    double c_d = 0.0;        // Γ(2d+2)cos(πd)/(2π)
};

// c(d) = Γ(2d+2)cos(πd)/(2π).
double fgn_constant(double d);

// f₀(λ) = c(d)|1−e^{iλ}|² Σ_k |λ+2πk|^{−2d−2}; |k| <= k_terms summed directly,
// the remainder by Euler–Maclaurin.
double fgn_density(double d, double lambda, int k_terms = 64);

// f(λ) = |θ(e^{iλ})/φ(e^{iλ})|² f₀(λ).
double composed_density(const ProcessSpec& spec, double lambda);

// 2π exp((1/2π) ∫_{−π}^{π} log f) for an even density given through log f on (0, π].
// `log_power` is β with log f(λ) − β log λ bounded at 0; `extra_log_points` lists
// interior angles where log f has integrable logarithmic singularities.
double szego_geometric_mean(const std::function<double(double)>& log_density, double log_power,
                            const std::vector<double>& extra_log_points = {});

SpectralConstants szego_constants(const ProcessSpec& spec);

}  // namespace longmem
