#pragma once

#include "longmem/process.hpp"

#include <utility>
#include <vector>

namespace longmem {

enum class Precision { double_precision, double_double };

// α(n) and σ²(n) for n = 1..N (stored at index n−1) plus the final weights g_N(1..N−1).
struct PredictorTrace {
    std::vector<double> alphas;
    std::vector<double> sigma2;
    std::vector<double> weights_final;  // weights_final[k−1] = g_N(k)
    int n_max = 0;

    double alpha(int n) const { return alphas[n - 1]; }
    double sigma_sq(int n) const { return sigma2[n - 1]; }
};

// Durbin recursion. Throws BreakdownError if an innovation variance drops to 1e-300 or below.
PredictorTrace levinson(const CovarianceTable& cov, int n_max, Precision precision = Precision::double_precision);

// Weights g_n(1..n−1) from a dense LU solve of Σ_k g_n(k)γ(j−k) = γ(j), j = 1..n−1.
std::vector<double> toeplitz_solve_direct(const CovarianceTable& cov, int n);

// (σ²(n), α(n)) from weights solving the order-n normal equations.
std::pair<double, double> prediction_error_and_corr(const CovarianceTable& cov, const std::vector<double>& weights, int n);

}  // namespace longmem
