#pragma once

#include "longmem/inteq.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace longmem {

// ζ_k: MA zeros reflected into the unit disk, followed by s₀ when d > 0.
std::vector<cplx> reflect_zeros(const ProcessSpec& spec, std::optional<double> s0);

enum class SystemKind { a_system, b_system };

struct AlgebraicSystem {
    std::vector<cplx> nodes;  // z_k: MA zeros, then 1/s₀ when d > 0
    std::vector<cplx> zeta;
    Eigen::MatrixXcd matrix;
    Eigen::VectorXcd rhs;
    cplx beta;                // σ₀² ∏_{k ≤ q(d)} (−1/z_k); the last-row right-hand side is β/2
    SystemKind kind = SystemKind::a_system;
    double condition = 0.0;   // 2-norm condition number
};

// Rows at nodes outside the disk are divided by z_k^{n+2q} so every entry stays O(1).
AlgebraicSystem build_system(SystemKind kind, const SDEvaluators& sd);

struct ABSolution {
    int n = 0;
    std::vector<cplx> a, b;
    double cond_a = 0.0, cond_b = 0.0;
    double imag_residue = 0.0;  // |Im| of a_{q(d)}, b_{q(d)} relative to their moduli
    double a_last = 0.0, b_last = 0.0;
    double sigma2 = 0.0;        // a_{q(d)} + b_{q(d)}
    double alpha = 0.0;         // (a − b)/(a + b)
};

// Dense LU solve of both systems. Throws ConditioningError above max_condition.
ABSolution solve_ab_systems(const SDEvaluators& sd, double max_condition = 1e12);
ABSolution solve_ab_systems(const AnalyticContext& ctx, int n, SolverRoute route = SolverRoute::nystrom,
                            const InteqOptions& options = {});

struct VandermondeIdentities {
    cplx eVe, oneVe, eVu;                       // closed forms
    cplx eVe_dense, oneVe_dense, eVu_dense;     // from a dense inverse of V(ζ, 0)
    double max_error = 0.0;                     // relative
};

// e^T V^{-1} e, 1^T V^{-1} e and e^T V^{-1} u for V = V(ζ₁..ζ_m, 0).
VandermondeIdentities vandermonde_identities(const std::vector<cplx>& zeta);

struct Prediction {
    double sigma2;       // σ²(n) predicted
    double alpha;        // d/n
    double delta;        // σ² d²/n
    double sigma2_limit; // σ₀² ∏_{|z_j|<1} z_j^{−2}
};

Prediction predicted_asymptotics(const ProcessSpec& spec, int n, double sigma0_sq);

// Second-order coefficients n(a/(σ²/2) − 1) and n(1 − b/(σ²/2)) with their limits d(1 ± d).
struct SecondOrder {
    int n;
    double a_coeff, b_coeff;
    double a_limit, b_limit;
};
SecondOrder second_order_coefficients(const ABSolution& sol, const AnalyticContext& ctx);

struct TrustThreshold {
    std::optional<int> n0;
    std::vector<int> tried;
};

// Smallest n on the grid where sup|h e^{−nr}|·|sin πd| ≤ ½(1 + |sin πd|) and both systems have
// condition number below max_condition.
TrustThreshold find_trusted_order(const AnalyticContext& ctx, const std::vector<int>& n_grid,
                                  double max_condition = 1e8);

}  // namespace longmem
