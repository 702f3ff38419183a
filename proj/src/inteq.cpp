#include "longmem/inteq.hpp"

#include "longmem/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace longmem {

namespace {

constexpr double pi = std::numbers::pi;

// Solve x = sign·K x + f on the nodes; norms are the quadrature-weighted L2 norms.
void solve_discrete(const Eigen::MatrixXd& K, double sign, const Eigen::VectorXd& f, const std::vector<double>& weights,
                    SolverRoute route, const InteqOptions& options, InteqSolution& out) {
    const Eigen::Index N = f.size();
    const Eigen::Map<const Eigen::VectorXd> wv(weights.data(), N);
    const auto norm = [&](const Eigen::VectorXd& v) { return std::sqrt(wv.dot(v.cwiseAbs2())); };
    Eigen::VectorXd x;
    if (route == SolverRoute::nystrom) {
        Eigen::MatrixXd A = Eigen::MatrixXd::Identity(N, N) - sign * K;
        x = A.partialPivLu().solve(f);
        out.iterations = 0;
    } else {
        x = f;
        double prev_step = 0.0, first_step = 0.0;
        int it = 0;
        for (; it < options.neumann_max_iter; ++it) {
            Eigen::VectorXd next = sign * (K * x) + f;
            const double step = norm(next - x);
            const double scale = norm(next);
            if (!std::isfinite(step)) throw ConvergenceError("Neumann iteration diverged");
            if (prev_step > 0.0) out.contraction = step / prev_step;
            x = std::move(next);
            if (step <= options.neumann_tol * scale) break;
            if (it == 0) first_step = step;
            if (step > 1e8 * first_step) throw ConvergenceError("Neumann iteration is not contracting");
            prev_step = step;
        }
        if (it == options.neumann_max_iter) throw ConvergenceError("Neumann iteration hit its iteration cap");
        out.iterations = it + 1;
    }
    const Eigen::VectorXd r = x - sign * (K * x) - f;
    out.values.assign(x.data(), x.data() + N);
    out.residual = norm(r) / std::max(1e-300, norm(x));
}

}  // namespace

Rule inteq_base_rule(const InteqOptions& options) {
    Rule r = composite(geometric_edges(0.0, 1.0, options.ratio, options.finest), options.graded_order);
    std::vector<double> outer{1.0, 2.0, 4.0, 8.0};
    for (double e = 16.0; e < options.tau_max; e += 8.0) outer.push_back(e);
    outer.push_back(options.tau_max);
    r.append(composite(outer, options.outer_order));
    return r;
}

HorizonKernel::HorizonKernel(int n, const AnalyticContext& ctx, const InteqOptions& options)
    : n_(n), ctx_(&ctx), options_(options), coefficient_(std::sin(pi * ctx.d()) / pi) {
    if (n < 1) throw DomainError("horizon n must be positive");
    const Rule base = inteq_base_rule(options);
    const std::size_t N = base.size();
    r_.resize(N);
    w_.resize(N);
    h_.resize(N);
    m_.resize(N);
    for (std::size_t k = 0; k < N; ++k) {
        r_[k] = base.x[k] / n;
        w_[k] = base.w[k] / n;
        h_[k] = h_kernel(r_[k], ctx);
        m_[k] = w_[k] * h_[k] * std::exp(-base.x[k]);
    }
}

double HorizonKernel::sup_he() const {
    double s = 0.0;
    for (std::size_t k = 0; k < r_.size(); ++k) s = std::max(s, std::abs(h_[k] * std::exp(-n_ * r_[k])));
    return s;
}

double HorizonKernel::kernel(double t, double r, double h_r) const {
    return coefficient_ * h_r * std::exp(-n_ * r) / std::expm1(r + t);
}

std::pair<InteqSolution, InteqSolution> solve_uw(int j, const HorizonKernel& kernel, SolverRoute route) {
    if (j < 0) throw DomainError("index j must be non-negative");
    const auto& r = kernel.nodes();
    const auto& m = kernel.masses();
    const Eigen::Index N = static_cast<Eigen::Index>(r.size());
    Eigen::MatrixXd K(N, N);
    Eigen::VectorXd f(N);
    for (Eigen::Index i = 0; i < N; ++i) {
        f(i) = std::exp(j * r[i]);
        for (Eigen::Index k = 0; k < N; ++k) K(i, k) = kernel.coefficient() * m[k] / std::expm1(r[i] + r[k]);
    }
    std::pair<InteqSolution, InteqSolution> out;
    for (int pass = 0; pass < 2; ++pass) {
        InteqSolution& s = pass == 0 ? out.first : out.second;
        s.nodes = r;
        s.weights = kernel.weights();
        s.j = j;
        s.n = kernel.n();
        s.kind = pass == 0 ? SolutionKind::u : SolutionKind::w;
        s.route = route;
        solve_discrete(K, pass == 0 ? 1.0 : -1.0, f, s.weights, route, kernel.options(), s);
    }
    return out;
}

std::pair<InteqSolution, InteqSolution> solve_uw(int j, int n, const AnalyticContext& ctx, SolverRoute route) {
    const HorizonKernel kernel(n, ctx);
    return solve_uw(j, kernel, route);
}

namespace {

std::pair<InteqSolution, InteqSolution> solve_qp(double d, int n, bool scaled, SolverRoute route,
                                                 const InteqOptions& options) {
    check_memory_parameter(d);
    const Rule base = inteq_base_rule(options);
    const double c = std::sin(pi * d) / pi;
    const Eigen::Index N = static_cast<Eigen::Index>(base.size());
    // In the scaled variable the n = 1 equation is solved; otherwise the grid is used as is in r.
    const double rate = scaled ? 1.0 : static_cast<double>(n);
    Eigen::MatrixXd K(N, N);
    for (Eigen::Index i = 0; i < N; ++i)
        for (Eigen::Index k = 0; k < N; ++k)
            K(i, k) = c * base.w[k] * std::exp(-rate * base.x[k]) / (base.x[k] + base.x[i]);
    const Eigen::VectorXd f = Eigen::VectorXd::Ones(N);
    std::pair<InteqSolution, InteqSolution> out;
    for (int pass = 0; pass < 2; ++pass) {
        InteqSolution& s = pass == 0 ? out.first : out.second;
        s.nodes = base.x;
        s.weights = base.w;
        s.j = 0;
        if (!scaled) s.n = n;
        s.kind = scaled ? (pass == 0 ? SolutionKind::q1 : SolutionKind::p1) : (pass == 0 ? SolutionKind::qn : SolutionKind::pn);
        s.route = route;
        solve_discrete(K, pass == 0 ? 1.0 : -1.0, f, s.weights, route, options, s);
    }
    return out;
}

}  // namespace

std::pair<InteqSolution, InteqSolution> solve_q1_p1(double d, SolverRoute route, const InteqOptions& options) {
    return solve_qp(d, 1, true, route, options);
}

std::pair<InteqSolution, InteqSolution> solve_qn_pn(double d, int n, const InteqOptions& options) {
    if (n < 1) throw DomainError("n must be positive");
    return solve_qp(d, n, false, SolverRoute::nystrom, options);
}

double evaluate_qp(const InteqSolution& sol, double d, double t) {
    const double sign = (sol.kind == SolutionKind::q1 || sol.kind == SolutionKind::qn) ? 1.0 : -1.0;
    const double rate = sol.n ? static_cast<double>(*sol.n) : 1.0;
    double s = 0.0;
    for (std::size_t k = 0; k < sol.nodes.size(); ++k)
        s += sol.weights[k] * std::exp(-rate * sol.nodes[k]) * sol.values[k] / (sol.nodes[k] + t);
    return 1.0 + sign * std::sin(pi * d) / pi * s;
}

LambdaMu lambda_mu_constants(double d, const InteqSolution& q1, const InteqSolution& p1) {
    LambdaMu r;
    r.d = d;
    for (std::size_t k = 0; k < q1.nodes.size(); ++k) {
        r.lambda0_numeric += q1.weights[k] * q1.values[k] * std::exp(-q1.nodes[k]);
        r.mu0_numeric += p1.weights[k] * p1.values[k] * std::exp(-p1.nodes[k]);
    }
    r.lambda0_closed = pi * d * (1.0 + d) / std::sin(pi * d);
    r.mu0_closed = pi * d * (1.0 - d) / std::sin(pi * d);
    r.rel_err = std::max(std::abs(r.lambda0_numeric / r.lambda0_closed - 1.0),
                         std::abs(r.mu0_numeric / r.mu0_closed - 1.0));
    if (!(r.rel_err <= 1e-4)) throw ConvergenceError("lambda0/mu0 disagree with their closed forms");
    return r;
}

LambdaMu lambda_mu_constants(double d, const InteqOptions& options) {
    const auto [q1, p1] = solve_q1_p1(d, SolverRoute::nystrom, options);
    return lambda_mu_constants(d, q1, p1);
}

namespace {

cplx ipow(cplx z, int j) {
    cplx r = 1.0;
    for (int i = 0; i < j; ++i) r *= z;
    return r;
}

}  // namespace

SDValue sd_evaluate(cplx z, const HorizonKernel& kernel, const InteqSolution& u, const InteqSolution& w) {
    const auto& r = kernel.nodes();
    const auto& m = kernel.masses();
    cplx su = 0.0, sw = 0.0;
    for (std::size_t k = 0; k < r.size(); ++k) {
        const cplx den = z * std::exp(r[k]) - 1.0;
        if (std::abs(den) < 1e-12) throw DomainError("evaluation point too close to the kernel pole");
        su += m[k] * u.values[k] / den;
        sw += m[k] * w.values[k] / den;
    }
    const cplx zj = ipow(z, u.j);
    return {zj + kernel.coefficient() * su, zj - kernel.coefficient() * sw};
}

SDValue sd_derivative(cplx z, const HorizonKernel& kernel, const InteqSolution& u, const InteqSolution& w) {
    const auto& r = kernel.nodes();
    const auto& m = kernel.masses();
    cplx su = 0.0, sw = 0.0;
    for (std::size_t k = 0; k < r.size(); ++k) {
        const double e = std::exp(r[k]);
        const cplx den = z * e - 1.0;
        if (std::abs(den) < 1e-12) throw DomainError("evaluation point too close to the kernel pole");
        su += m[k] * u.values[k] * e / (den * den);
        sw += m[k] * w.values[k] * e / (den * den);
    }
    const cplx dz = u.j == 0 ? cplx(0.0) : static_cast<double>(u.j) * ipow(z, u.j - 1);
    return {dz - kernel.coefficient() * su, dz + kernel.coefficient() * sw};
}

std::vector<SDValue> SDEvaluators::at(cplx z) const {
    std::vector<SDValue> out;
    for (std::size_t j = 0; j < u.size(); ++j) out.push_back(sd_evaluate(z, *kernel, u[j], w[j]));
    return out;
}

SDEvaluators sd_evaluators(const HorizonKernel& kernel, SolverRoute route) {
    SDEvaluators ev;
    ev.kernel = &kernel;
    const int qd = kernel.context().q_of_d();
    for (int j = 0; j <= qd; ++j) {
        auto [u, w] = solve_uw(j, kernel, route);
        ev.u.push_back(std::move(u));
        ev.w.push_back(std::move(w));
    }
    return ev;
}

ContractionProbe::ContractionProbe(const HorizonKernel& kernel) {
    // Cells partition (0, τ_max/n) by cumulative weights; each node lies inside its cell.
    const auto& w = kernel.weights();
    const AnalyticContext& ctx = kernel.context();
    const Rule sub = gauss_legendre(0.0, 1.0, 8);
    std::vector<std::vector<double>> sub_r(w.size()), sub_mass(w.size());
    double left = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        const double width = w[k];
        for (std::size_t i = 0; i < sub.size(); ++i) {
            const double rr = left + width * sub.x[i];
            sub_r[k].push_back(rr);
            sub_mass[k].push_back(width * sub.w[i] * h_kernel(rr, ctx) * std::exp(-kernel.n() * rr));
        }
        cell_w_.push_back(width);
        left += width;
    }
    std::vector<double> t_edges = geometric_edges(0.0, 1.0, 0.25, 1e-16);
    for (double e : {2.0, 4.0, 8.0, 16.0, 32.0, 48.0, 64.0}) t_edges.push_back(e);
    const Rule t_rule = composite(t_edges, 12);
    t_w_ = t_rule.w;
    matrix_.assign(t_rule.size(), std::vector<double>(w.size(), 0.0));
    for (std::size_t i = 0; i < t_rule.size(); ++i)
        for (std::size_t k = 0; k < w.size(); ++k) {
            double s = 0.0;
            for (std::size_t m = 0; m < sub_r[k].size(); ++m) s += sub_mass[k][m] / std::expm1(sub_r[k][m] + t_rule.x[i]);
            matrix_[i][k] = kernel.coefficient() * s;
        }
}

double ContractionProbe::ratio(const std::vector<double>& f) const {
    if (f.size() != cell_w_.size()) throw DomainError("cell vector has the wrong length");
    double nf = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) nf += cell_w_[k] * f[k] * f[k];
    double na = 0.0;
    for (std::size_t i = 0; i < matrix_.size(); ++i) {
        double a = 0.0;
        for (std::size_t k = 0; k < f.size(); ++k) a += matrix_[i][k] * f[k];
        na += t_w_[i] * a * a;
    }
    return std::sqrt(na / nf);
}

double ContractionProbe::operator_norm() const {
    const Eigen::Index rows = static_cast<Eigen::Index>(matrix_.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(cell_w_.size());
    Eigen::MatrixXd M(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index k = 0; k < cols; ++k)
            M(i, k) = std::sqrt(t_w_[i]) * matrix_[i][k] / std::sqrt(cell_w_[k]);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(M);
    return svd.singularValues()(0);
}

}  // namespace longmem
