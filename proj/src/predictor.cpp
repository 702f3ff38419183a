#include "longmem/predictor.hpp"

#include "longmem/double_double.hpp"
#include "longmem/errors.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace longmem {

namespace {

template <class Real>
PredictorTrace durbin(const CovarianceTable& cov, int n_max) {
    PredictorTrace tr;
    tr.n_max = n_max;
    tr.alphas.resize(n_max);
    tr.sigma2.resize(n_max);
    std::vector<Real> g(n_max + 1, Real(0.0));  // g[k] = current order weights
    std::vector<Real> prev(n_max + 1, Real(0.0));
    Real v = cov.gamma[0];
    for (int m = 1; m <= n_max; ++m) {
        // Here g holds φ_{m−1,·}, the weights of order n = m, and v = σ²(m).
        if (v <= 1e-300) throw BreakdownError("innovation variance is not positive");
        tr.sigma2[m - 1] = static_cast<double>(v);
        if (m == n_max) {
            tr.weights_final.resize(n_max - 1);
            for (int k = 1; k < n_max; ++k) tr.weights_final[k - 1] = static_cast<double>(g[k]);
        }
        Real acc = cov.gamma[m];
        for (int k = 1; k < m; ++k) acc -= g[k] * Real(cov.gamma[m - k]);
        const Real a = acc / v;
        tr.alphas[m - 1] = static_cast<double>(a);
        for (int k = 1; k < m; ++k) prev[k] = g[k];
        for (int k = 1; k < m; ++k) g[k] = prev[k] - a * prev[m - k];
        g[m] = a;
        v = v * (Real(1.0) - a * a);
    }
    return tr;
}

}  // namespace

PredictorTrace levinson(const CovarianceTable& cov, int n_max, Precision precision) {
    if (n_max < 1 || n_max > cov.n_max) throw DomainError("n_max must lie in [1, covariance lag count]");
    if (!(cov.gamma[0] > 0.0)) throw DomainError("gamma(0) must be positive");
    if (precision == Precision::double_double) return durbin<DoubleDouble>(cov, n_max);
    return durbin<double>(cov, n_max);
}

std::vector<double> toeplitz_solve_direct(const CovarianceTable& cov, int n) {
    if (n < 1 || n > cov.n_max) throw DomainError("order outside covariance range");
    const int m = n - 1;
    if (m == 0) return {};
    Eigen::MatrixXd T(m, m);
    Eigen::VectorXd rhs(m);
    for (int j = 1; j <= m; ++j) {
        rhs(j - 1) = cov(j);
        for (int k = 1; k <= m; ++k) T(j - 1, k - 1) = cov(j - k);
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(T);
    if (!(lu.rcond() > 1e-15)) throw ConditioningError("Toeplitz matrix is singular", 1.0 / lu.rcond());
    Eigen::VectorXd g = lu.solve(rhs);
    return std::vector<double>(g.data(), g.data() + m);
}

std::pair<double, double> prediction_error_and_corr(const CovarianceTable& cov, const std::vector<double>& weights, int n) {
    if (static_cast<int>(weights.size()) != n - 1 || n > cov.n_max) throw DomainError("weights do not match order");
    double s2 = cov(0);
    double c = cov(n);
    for (int j = 1; j < n; ++j) {
        s2 -= weights[j - 1] * cov(j);
        c -= weights[j - 1] * cov(j - n);
    }
    return {s2, c / s2};
}

}  // namespace longmem
