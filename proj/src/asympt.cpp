#include "longmem/asympt.hpp"

#include "longmem/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace longmem {

namespace {

constexpr double pi = std::numbers::pi;

// Zeros on the positive real axis sit on the cut [0, 1] after reflection.
void check_off_cut(cplx z) {
    if (std::abs(z.imag()) <= 1e-12 * std::abs(z) && z.real() > 0.0)
        throw BranchCutError("positive real MA zero lies on the cut of X and S/D");
}

double condition_number(const Eigen::MatrixXcd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& s = svd.singularValues();
    return s(0) / s(s.size() - 1);
}

}  // namespace

std::vector<cplx> reflect_zeros(const ProcessSpec& spec, std::optional<double> s0) {
    if (spec.has_unit_circle_ma_zero())
        throw DomainError("MA zero on the unit circle; use the appendix_e path");
    if (s0.has_value() != (spec.d() > 0))
        throw DomainError("s0 must be supplied exactly when d > 0");
    std::vector<cplx> zeta;
    for (cplx z : spec.ma_zeros()) zeta.push_back(std::abs(z) < 1.0 ? z : 1.0 / z);
    if (s0) zeta.emplace_back(*s0, 0.0);
    return zeta;
}

AlgebraicSystem build_system(SystemKind kind, const SDEvaluators& sd) {
    const HorizonKernel& kernel = *sd.kernel;
    const AnalyticContext& ctx = kernel.context();
    const ProcessSpec& spec = ctx.spec();
    const int n = kernel.n();
    const int m = ctx.q_of_d() + 1;
    const double sign = kind == SystemKind::a_system ? 1.0 : -1.0;

    AlgebraicSystem sys;
    sys.kind = kind;
    sys.zeta = reflect_zeros(spec, ctx.s0());
    sys.nodes = spec.ma_zeros();
    if (ctx.s0()) sys.nodes.emplace_back(1.0 / *ctx.s0(), 0.0);
    sys.matrix.resize(m, m);
    sys.rhs = Eigen::VectorXcd::Zero(m);

    const double shift = n + 2.0 * spec.q();
    for (int k = 0; k + 1 < m; ++k) {
        const cplx z = sys.nodes[static_cast<std::size_t>(k)];
        check_off_cut(z);
        const cplx zi = 1.0 / z;
        const auto at_z = sd.at(z);
        const auto at_zi = sd.at(zi);
        const cplx fz = x_factor(z, ctx) * spec.phi()(z);
        const cplx fzi = x_factor(zi, ctx) * spec.phi()(zi);
        // Divide through by z^{shift} when |z| > 1 so the larger factor is O(1).
        const bool outside = std::abs(z) > 1.0;
        const cplx near_w = outside ? std::pow(zi, shift) : cplx(1.0);
        const cplx far_w = outside ? cplx(1.0) : std::pow(z, shift);
        for (int j = 0; j < m; ++j) {
            const auto& a = at_z[static_cast<std::size_t>(j)];
            const auto& b = at_zi[static_cast<std::size_t>(j)];
            const cplx vz = kind == SystemKind::a_system ? a.S : a.D;
            const cplx vzi = kind == SystemKind::a_system ? b.S : b.D;
            sys.matrix(k, j) = near_w * fz * vz + sign * far_w * fzi * vzi;
        }
    }
    const auto at0 = sd.at(cplx(0.0));
    for (int j = 0; j < m; ++j) {
        const auto& v = at0[static_cast<std::size_t>(j)];
        sys.matrix(m - 1, j) = kind == SystemKind::a_system ? v.S : v.D;
    }
    cplx prod = 1.0;
    for (cplx z : sys.nodes) prod *= -1.0 / z;
    sys.beta = ctx.sigma0_sq() * prod;
    sys.rhs(m - 1) = 0.5 * sys.beta;
    sys.condition = condition_number(sys.matrix);
    return sys;
}

ABSolution solve_ab_systems(const SDEvaluators& sd, double max_condition) {
    ABSolution out;
    out.n = sd.kernel->n();
    for (SystemKind kind : {SystemKind::a_system, SystemKind::b_system}) {
        const AlgebraicSystem sys = build_system(kind, sd);
        if (!(sys.condition <= max_condition))
            throw ConditioningError("algebraic system is ill-conditioned", sys.condition);
        const Eigen::VectorXcd x = sys.matrix.partialPivLu().solve(sys.rhs);
        std::vector<cplx> v(x.data(), x.data() + x.size());
        if (kind == SystemKind::a_system) {
            out.a = std::move(v);
            out.cond_a = sys.condition;
        } else {
            out.b = std::move(v);
            out.cond_b = sys.condition;
        }
    }
    const cplx a = out.a.back(), b = out.b.back();
    out.imag_residue = std::max(std::abs(a.imag()) / std::abs(a), std::abs(b.imag()) / std::abs(b));
    if (!(out.imag_residue < 1e-8)) throw ConvergenceError("a/b solution has a non-negligible imaginary part");
    out.a_last = a.real();
    out.b_last = b.real();
    out.sigma2 = out.a_last + out.b_last;
    out.alpha = (out.a_last - out.b_last) / out.sigma2;
    return out;
}

ABSolution solve_ab_systems(const AnalyticContext& ctx, int n, SolverRoute route, const InteqOptions& options) {
    const HorizonKernel kernel(n, ctx, options);
    const SDEvaluators sd = sd_evaluators(kernel, route);
    return solve_ab_systems(sd);
}

VandermondeIdentities vandermonde_identities(const std::vector<cplx>& zeta) {
    const int m = static_cast<int>(zeta.size());
    if (m == 0) throw DomainError("empty node list");
    for (int i = 0; i < m; ++i) {
        if (std::abs(zeta[i]) < 1e-14 || std::abs(zeta[i] - 1.0) < 1e-14)
            throw DomainError("Vandermonde node equal to 0 or 1");
        for (int k = 0; k < i; ++k)
            if (std::abs(zeta[i] - zeta[k]) < 1e-12) throw DomainError("coincident Vandermonde nodes");
    }
    VandermondeIdentities r;
    r.eVe = r.oneVe = 1.0;
    r.eVu = -1.0;
    for (cplx z : zeta) {
        r.eVe *= -1.0 / z;
        r.oneVe *= (z - 1.0) / z;
        r.eVu *= 1.0 / (1.0 - z);
    }
    const int size = m + 1;
    Eigen::MatrixXcd V = Eigen::MatrixXcd::Zero(size, size);
    Eigen::VectorXcd u(size);
    for (int i = 0; i < m; ++i) {
        cplx p = 1.0;
        for (int j = 0; j < size; ++j, p *= zeta[i]) V(i, j) = p;
        u(i) = 1.0 / (zeta[i] - 1.0);
    }
    V(m, 0) = 1.0;
    u(m) = -1.0;
    const Eigen::MatrixXcd inv = V.fullPivLu().inverse();
    r.eVe_dense = inv(m, m);
    r.oneVe_dense = inv.col(m).sum();
    r.eVu_dense = (inv.row(m) * u)(0);
    const auto rel = [](cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(a), 1e-300); };
    r.max_error = std::max({rel(r.eVe, r.eVe_dense), rel(r.oneVe, r.oneVe_dense), rel(r.eVu, r.eVu_dense)});
    return r;
}

Prediction predicted_asymptotics(const ProcessSpec& spec, int n, double sigma0_sq) {
    if (n < 1) throw DomainError("n must be positive");
    double factor = 1.0;
    for (cplx z : spec.ma_zeros())
        if (std::abs(z) < 1.0) factor /= std::norm(z);
    Prediction p;
    p.sigma2_limit = sigma0_sq * factor;
    p.alpha = spec.d() / n;
    p.delta = p.sigma2_limit * spec.d() * spec.d() / n;
    p.sigma2 = p.sigma2_limit + p.delta;
    return p;
}

SecondOrder second_order_coefficients(const ABSolution& sol, const AnalyticContext& ctx) {
    const Prediction p = predicted_asymptotics(ctx.spec(), sol.n, ctx.sigma0_sq());
    const double half = 0.5 * p.sigma2_limit;
    const double d = ctx.d();
    return {sol.n, sol.n * (sol.a_last / half - 1.0), sol.n * (1.0 - sol.b_last / half), d * (1.0 + d), d * (1.0 - d)};
}

TrustThreshold find_trusted_order(const AnalyticContext& ctx, const std::vector<int>& n_grid, double max_condition) {
    TrustThreshold out;
    const double sine = std::abs(std::sin(pi * ctx.d()));
    const double bound = 0.5 * (1.0 + sine);
    for (int n : n_grid) {
        out.tried.push_back(n);
        const HorizonKernel kernel(n, ctx);
        if (kernel.sup_he() * sine > bound) continue;
        try {
            const SDEvaluators sd = sd_evaluators(kernel);
            const ABSolution sol = solve_ab_systems(sd, max_condition);
            (void)sol;
        } catch (const ConditioningError&) {
            continue;
        } catch (const ConvergenceError&) {
            continue;
        }
        out.n0 = n;
        break;
    }
    return out;
}

}  // namespace longmem
