#pragma once

#include "longmem/analytic.hpp"
#include "longmem/quadrature.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace longmem {

enum class SolutionKind { u, w, q1, p1, qn, pn };
enum class SolverRoute { neumann, nystrom };

struct InteqOptions {
    int graded_order = 12;     // nodes per geometric panel near 0
    int outer_order = 16;      // nodes per panel on [1, tau_max]
    double ratio = 0.25;
    double finest = 1e-40;
    double tau_max = 48.0;
    double neumann_tol = 1e-12;
    int neumann_max_iter = 20000;
};

// Rule on (0, tau_max) in the scaled variable τ = n r.
Rule inteq_base_rule(const InteqOptions& options = {});

struct InteqSolution {
    std::vector<double> nodes;    // physical variable (r for u/w, τ for q1/p1)
    std::vector<double> weights;
    std::vector<double> values;
    int j = 0;
    std::optional<int> n;
    SolutionKind kind = SolutionKind::u;
    SolverRoute route = SolverRoute::nystrom;
    double residual = 0.0;       // weighted L2 residual relative to the solution norm
    int iterations = 0;          // Neumann sweeps (0 for Nyström)
    double contraction = 0.0;    // observed Neumann ratio of successive differences
};

// Discretized A_n f(t) = (sin πd/π)∫_0^∞ h(r)e^{−nr}/(e^{r+t} − 1) f(r) dr at horizon n.
class HorizonKernel {
public:
    HorizonKernel(int n, const AnalyticContext& ctx, const InteqOptions& options = {});

    int n() const { return n_; }
    double coefficient() const { return coefficient_; }  // sin(πd)/π
    const std::vector<double>& nodes() const { return r_; }
    const std::vector<double>& weights() const { return w_; }
    const std::vector<double>& h_values() const { return h_; }
    // m_k = ω_k h(r_k) e^{−n r_k}
    const std::vector<double>& masses() const { return m_; }
    const AnalyticContext& context() const { return *ctx_; }
    const InteqOptions& options() const { return options_; }

    // sup_k |h(r_k) e^{−n r_k}|
    double sup_he() const;
    // Kernel value (without the quadrature weight) between target t and source r.
    double kernel(double t, double r, double h_r) const;

private:
    int n_;
    const AnalyticContext* ctx_;
    InteqOptions options_;
    double coefficient_;
    std::vector<double> r_, w_, h_, m_;
};

// Fixed points of x = ±A_n x + e^{jt}: u for the plus sign, w for the minus sign.
std::pair<InteqSolution, InteqSolution> solve_uw(int j, const HorizonKernel& kernel,
                                                 SolverRoute route = SolverRoute::nystrom);
std::pair<InteqSolution, InteqSolution> solve_uw(int j, int n, const AnalyticContext& ctx,
                                                 SolverRoute route = SolverRoute::nystrom);

// q₁ and p₁: x = ±(sin πd/π)∫_0^∞ e^{−r}/(r + t) x(r) dr + 1.
std::pair<InteqSolution, InteqSolution> solve_q1_p1(double d, SolverRoute route = SolverRoute::nystrom,
                                                    const InteqOptions& options = {});

// q_n and p_n with kernel e^{−nr}/(r + t), solved on an unscaled grid in r.
std::pair<InteqSolution, InteqSolution> solve_qn_pn(double d, int n, const InteqOptions& options = {});

// Nyström interpolant of a q/p-type solution at arbitrary t > 0.
double evaluate_qp(const InteqSolution& sol, double d, double t);

struct LambdaMu {
    double d = 0.0;
    double lambda0_numeric = 0.0;
    double lambda0_closed = 0.0;
    double mu0_numeric = 0.0;
    double mu0_closed = 0.0;
    double rel_err = 0.0;  // max of the two relative errors
};

// λ₀ = ∫q₁e^{−τ}dτ, μ₀ = ∫p₁e^{−τ}dτ against πd(1±d)/sin(πd). Throws ConvergenceError
// if either relative error exceeds 1e-4.
LambdaMu lambda_mu_constants(double d, const InteqOptions& options = {});
LambdaMu lambda_mu_constants(double d, const InteqSolution& q1, const InteqSolution& p1);

// S_{j,n}(z) and D_{j,n}(z) from solved u_{j,n}, w_{j,n}.
struct SDValue {
    cplx S;
    cplx D;
};
SDValue sd_evaluate(cplx z, const HorizonKernel& kernel, const InteqSolution& u, const InteqSolution& w);
// First derivatives in z.
SDValue sd_derivative(cplx z, const HorizonKernel& kernel, const InteqSolution& u, const InteqSolution& w);

// All j = 0..q(d) at once.
struct SDEvaluators {
    const HorizonKernel* kernel = nullptr;
    std::vector<InteqSolution> u, w;
    std::vector<SDValue> at(cplx z) const;
};
SDEvaluators sd_evaluators(const HorizonKernel& kernel, SolverRoute route = SolverRoute::nystrom);

// ‖A_n f‖/‖f‖ in L²(ℝ₊) for f piecewise constant on the quadrature cells of the kernel nodes.
class ContractionProbe {
public:
    explicit ContractionProbe(const HorizonKernel& kernel);
    double ratio(const std::vector<double>& cell_values) const;
    // Largest ratio over all piecewise-constant f (discrete operator norm).
    double operator_norm() const;
    std::size_t cells() const { return cell_w_.size(); }

private:
    std::vector<double> cell_w_;
    std::vector<double> t_w_;
    std::vector<std::vector<double>> matrix_;  // rows: t nodes, columns: cells
};

}  // namespace longmem
