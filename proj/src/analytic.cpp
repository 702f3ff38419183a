#include "longmem/analytic.hpp"

#include "longmem/errors.hpp"
#include "longmem/quadrature.hpp"
#include "longmem/spectral.hpp"

#include <boost/math/tools/roots.hpp>

#include <array>
#include <cmath>
#include <numbers>

namespace longmem {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I(0.0, 1.0);

constexpr int lw_terms = 32;

// Σ_{k>K} (w + 2πi·sign·k)^{−b} by Euler–Maclaurin; the path stays off the branch cut.
cplx lw_tail(cplx w, double b, int sign) {
    const cplx step = 2.0 * pi * I * static_cast<double>(sign);
    const cplx x = w + step * static_cast<double>(lw_terms);
    auto deriv = [&](int m) {
        cplx c = 1.0;
        for (int i = 0; i < m; ++i) c *= -(b + i) * step;
        return c * std::pow(x, -b - m);
    };
    const cplx integral = std::pow(x, 1.0 - b) / ((b - 1.0) * step);
    return integral - 0.5 * deriv(0) - deriv(1) / 12.0 + deriv(3) / 720.0 - deriv(5) / 30240.0 +
           deriv(7) / 1209600.0;
}

// Γ(b) Σ_k (w + 2πik)^{−b} with b = 2 + 2d; the k = 0 term is passed in so callers can
// pick a boundary branch.
cplx lindelof_sum(cplx w, double d, cplx k0_term) {
    const double b = 2.0 + 2.0 * d;
    cplx s = k0_term;
    for (int k = 1; k <= lw_terms; ++k) {
        const cplx shift = 2.0 * pi * I * static_cast<double>(k);
        s += std::pow(w + shift, -b) + std::pow(w - shift, -b);
    }
    s += lw_tail(w, b, 1) + lw_tail(w, b, -1);
    return std::tgamma(b) * s;
}

cplx mu_series(cplx z, double d) {
    const double a = 2.0 * d + 1.0;
    cplx s = 0.0;
    cplx zk = z;
    for (int k = 1; k < 400; ++k) {
        const cplx term = std::pow(static_cast<double>(k), a) * zk;
        s += term;
        if (k > 4 && std::abs(term) <= 1e-18 * std::abs(s)) break;
        zk *= z;
    }
    return s;
}

// Nodes v and weights e^v/(1+e^v)² for ∫_ℝ F(v) e^v/(1+e^v)² dv.
struct LogisticRule {
    std::vector<double> v, w;
    LogisticRule() {
        const Rule r = composite(uniform_edges(-40.0, 40.0, 4.0), 16);
        v = r.x;
        w.resize(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            const double e = std::exp(-std::abs(r.x[i]));
            w[i] = r.w[i] * e / ((1.0 + e) * (1.0 + e));
        }
    }
};

const LogisticRule& logistic_rule() {
    static const LogisticRule rule;
    return rule;
}

// The bracket πA e^{iπd} + 2Re(i e^{iπd} B), with the common factor 1/T removed.
cplx qplus_bracket(double L, double d) {
    const double g = std::tgamma(1.0 - 2.0 * d);
    const double ka = 4.0 * d * (2.0 * d + 1.0) / g;
    const double kb = -2.0 * d / g;
    const LogisticRule& rule = logistic_rule();
    cplx integral = 0.0;
    // (1 + (v + πi)/L)^{−2d−1} L^{−2d−1} = (L + v + πi)^{−2d−1} for L > 0.
    for (std::size_t i = 0; i < rule.v.size(); ++i)
        integral += rule.w[i] * std::pow(cplx(L + rule.v[i], pi), -2.0 * d - 1.0);
    const cplx rot = std::polar(1.0, pi * d);
    return pi * ka * std::pow(L, -2.0 * d - 2.0) * rot + 2.0 * std::real(I * rot * kb * integral);
}

}  // namespace

cplx polylog_mu(cplx z, double d) {
    check_memory_parameter(d);
    if (z.imag() == 0.0 && z.real() >= 1.0) throw BranchCutError("mu is cut along [1, inf)");
    if (std::abs(z) < 0.5) return mu_series(z, d);
    const cplx w = -std::log(z);
    return lindelof_sum(w, d, std::pow(w, -2.0 - 2.0 * d));
}

cplx polylog_mu_boundary(double T, double d, int side) {
    check_memory_parameter(d);
    if (!(T > 1.0)) throw DomainError("boundary values of mu are taken on (1, inf)");
    const double lw = std::log(T);  // w = −log T ± i0; upper side gives arg w = −π
    const double b = 2.0 + 2.0 * d;
    const cplx k0 = std::pow(lw, -b) * std::polar(1.0, side > 0 ? pi * b : -pi * b);
    return lindelof_sum(cplx(-lw, 0.0), d, k0);
}

cplx q_extension(cplx z, double d) {
    if (z.imag() == 0.0 && z.real() >= 0.0) throw BranchCutError("Q is cut along the positive real axis");
    const cplx pref = (z - 1.0) * (z - 1.0) / z;
    return pref * (polylog_mu(z, d) + polylog_mu(1.0 / z, d)) / (4.0 * pi);
}

cplx q_boundary_polylog(double t, double d, int side) {
    if (!(t > 0.0) || t == 1.0) throw DomainError("boundary values are taken on (0,1) and (1,inf)");
    const double pref = (t - 1.0) * (t - 1.0) / t / (4.0 * pi);
    if (t > 1.0) return pref * (polylog_mu_boundary(t, d, side) + polylog_mu(cplx(1.0 / t, 0.0), d));
    return pref * (polylog_mu(cplx(t, 0.0), d) + polylog_mu_boundary(1.0 / t, d, -side));
}

cplx q_plus_log(double L, double d) {
    check_memory_parameter(d);
    if (!(L > 0.0)) throw DomainError("q_plus requires t > 1");
    const double sh = std::sinh(0.5 * L);
    return 4.0 * sh * sh / (8.0 * pi * std::sin(pi * d)) * qplus_bracket(L, d);
}

cplx q_plus(double t, double d) {
    if (!(t > 1.0)) throw DomainError("q_plus requires t > 1");
    return q_plus_log(std::log(t), d);
}

double eta_log(double s, double d) {
    check_memory_parameter(d);
    if (!(s > 0.0)) throw DomainError("eta requires t in (0, 1)");
    // The positive prefactor 4 sinh²/(8π |sin πd|) does not affect the argument.
    const cplx b = qplus_bracket(s, d);
    return -std::arg(d > 0 ? b : -b);
}

double eta(double t, double d) {
    if (!(t > 0.0 && t < 1.0)) throw DomainError("eta requires t in (0, 1)");
    return eta_log(-std::log(t), d);
}

double find_s0(double d) {
    check_memory_parameter(d);
    if (d < 0) throw DomainError("Q has no zero on (-1, 0) for d < 0");
    auto r = [d](double s) { return (polylog_mu(cplx(s, 0.0), d) + polylog_mu(cplx(1.0 / s, 0.0), d)).real(); };
    constexpr int grid = 1000;
    int changes = 0;
    double lo = 0.0, hi = 0.0, prev_s = -1.0, prev = r(-1.0);
    for (int i = 1; i < grid; ++i) {
        const double s = -1.0 + static_cast<double>(i) / grid;
        const double v = r(s);
        if ((prev < 0) != (v < 0)) {
            ++changes;
            lo = prev_s;
            hi = s;
        }
        prev_s = s;
        prev = v;
    }
    if (changes != 1) throw ConvergenceError("expected exactly one sign change of mu(s)+mu(1/s) on (-1,0)");
    boost::uintmax_t iters = 200;
    auto tol = [](double a, double b) { return std::abs(a - b) <= 4e-16 * std::abs(a); };
    const auto bracket = boost::math::tools::toms748_solve(r, lo, hi, tol, iters);
    const double s0 = 0.5 * (bracket.first + bracket.second);
    if (std::abs(r(s0)) > 1e-12 * std::abs(r(-0.5))) throw ConvergenceError("s0 residual above tolerance");
    return s0;
}

AnalyticContext::AnalyticContext(const ProcessSpec& spec, AnalyticOptions options, const AnalyticCache* cache)
    : spec_(spec), options_(options) {
    const double d = spec_.d();
    const std::vector<double> edges = join_edges(geometric_edges(0.0, 1.0, options_.ratio, options_.finest),
                                                 uniform_edges(1.0, options_.sigma_max, options_.width));
    const Rule rule = composite(edges, options_.order);
    s_ = rule.x;
    w_ = rule.w;
    tau_.resize(s_.size());
    for (std::size_t i = 0; i < s_.size(); ++i) tau_[i] = std::exp(-s_[i]);
    if (cache && cache->eta_values.size() == s_.size()) {
        eta_ = cache->eta_values;
        if (d > 0) s0_ = cache->s0 ? *cache->s0 : find_s0(d);
    } else {
        eta_.resize(s_.size());
        for (std::size_t i = 0; i < s_.size(); ++i) eta_[i] = eta_log(s_[i], d);
        if (d > 0) s0_ = find_s0(d);
    }

    sigma0_sq_ = szego_constants(ProcessSpec(d)).sigma0_sq;

    // Circle grid on (0, π], graded toward the logarithmic singularity at λ = 0.
    const std::vector<double> circle = join_edges(geometric_edges(0.0, pi / 8.0, 0.25, 1e-24),
                                                  uniform_edges(pi / 8.0, pi, pi / 32.0));
    const Rule lr = composite(circle, 20);
    lambda_ = lr.x;
    lambda_w_ = lr.w;
    log_f0_.resize(lambda_.size());
    for (std::size_t i = 0; i < lambda_.size(); ++i) log_f0_[i] = std::log(fgn_density(d, lambda_[i]));
    psi0_ = psi(0.0).real();
}

cplx AnalyticContext::log_x0(cplx z) const {
    if (z.imag() == 0.0 && z.real() >= 0.0 && z.real() <= 1.0) throw BranchCutError("X0 is cut along [0, 1]");
    const double d = spec_.d();
    // Pole subtraction at t* (the projection of z onto the cut) when z is near it.
    double t_star = 0.0, eta_star = 0.0, s_star = 0.0;
    int mode = 0;  // 0: none, 1: t* = 1, 2: interior t*
    if (z.real() >= 1.0) {
        mode = 1;
        t_star = 1.0;
        eta_star = -d * pi;
    } else if (z.real() > 0.0 && std::abs(z.imag()) < 0.5) {
        mode = 2;
        t_star = z.real();
        s_star = -std::log(t_star);
        eta_star = eta_log(s_star, d);
    }
    const cplx offset = t_star - z;
    cplx sum = 0.0;
    for (std::size_t i = 0; i < s_.size(); ++i) {
        double diff;  // τ_i − t*
        if (mode == 1) diff = std::expm1(-s_[i]);
        else if (mode == 2) diff = t_star * std::expm1(s_star - s_[i]);
        else diff = tau_[i];
        sum += w_[i] * tau_[i] * (eta_[i] - eta_star) / (diff + offset);
    }
    // Remainder τ ∈ (0, e^{−sigma_max}) with η frozen at its last grid value.
    const double tau_end = std::exp(-options_.sigma_max);
    sum += (eta_.back() - eta_star) * std::log(1.0 - tau_end / z);
    if (mode != 0) sum += eta_star * std::log(1.0 - 1.0 / z);
    return sum / pi;
}

double AnalyticContext::eta_derivative(double s) const {
    const double h = 1e-4 * std::min(1.0, s);
    return (eta_log(s + h, spec_.d()) - eta_log(s - h, spec_.d())) / (2.0 * h);
}

// Σ ω_i τ_i (η_i − η(t))/(τ_i − t) over the grid plus the grid remainder.
double AnalyticContext::pv_sum(double s, double eta_s, double t) const {
    double sum = 0.0;
    double slope = 0.0;
    bool have_slope = false;
    for (std::size_t i = 0; i < s_.size(); ++i) {
        const double gap = s - s_[i];
        double quotient;
        if (std::abs(gap) <= 1e-7 * std::max(s, s_[i])) {
            if (!have_slope) {
                slope = -eta_derivative(s) / t;  // dη/dτ at τ = t
                have_slope = true;
            }
            quotient = slope;
        } else {
            quotient = (eta_[i] - eta_s) / (t * std::expm1(gap));
        }
        sum += w_[i] * tau_[i] * quotient;
    }
    const double tau_end = std::exp(-options_.sigma_max);
    sum += (eta_.back() - eta_s) * std::log1p(-tau_end / t);
    return sum;
}

double AnalyticContext::principal_integral(double s, double eta_s) const {
    if (!(s > 0.0) || s > options_.sigma_max - 4.0) throw DomainError("principal value requested outside the eta grid");
    return pv_sum(s, eta_s, std::exp(-s)) + eta_s * std::log(std::expm1(s));
}

double AnalyticContext::log_x0_principal(double s) const {
    return principal_integral(s, eta_log(s, spec_.d())) / pi;
}

cplx AnalyticContext::psi(cplx z) const {
    if (std::abs(std::abs(z) - 1.0) < 1e-12) throw DomainError("psi is evaluated off the unit circle");
    cplx sum = 0.0;
    for (std::size_t i = 0; i < lambda_.size(); ++i) {
        const cplx e = std::polar(1.0, lambda_[i]);
        const cplx k = e / (e - z) + std::conj(e) / (std::conj(e) - z);
        sum += lambda_w_[i] * log_f0_[i] * k;
    }
    return std::exp(-sum / (2.0 * pi));
}

cplx x0(cplx z, const AnalyticContext& ctx) { return std::exp(ctx.log_x0(z)); }

cplx x0_boundary(double t, int side, const AnalyticContext& ctx) {
    if (!(t > 0.0 && t < 1.0)) throw DomainError("boundary values of X0 are taken on (0, 1)");
    const double s = -std::log(t);
    const double e = eta_log(s, ctx.d());
    return std::exp(cplx(ctx.principal_integral(s, e) / pi, side > 0 ? e : -e));
}

cplx x_factor(cplx z, const AnalyticContext& ctx) {
    const cplx x = x0(z, ctx);
    return ctx.d() > 0 ? x / z : x;
}

cplx x_factor_boundary(double t, int side, const AnalyticContext& ctx) {
    const cplx x = x0_boundary(t, side, ctx);
    return ctx.d() > 0 ? x / t : x;
}

cplx psi_outer(cplx z, const AnalyticContext& ctx) { return ctx.psi(z); }

double h_kernel(double s, const AnalyticContext& ctx) {
    const ProcessSpec& spec = ctx.spec();
    const double d = spec.d();
    if (!(s > 0.0) || s > ctx.options().sigma_max - 4.0) throw DomainError("h is evaluated on (0, sigma_max - 4]");
    const auto& sn = ctx.s_nodes();
    const auto& wn = ctx.s_weights();
    const auto& tn = ctx.tau_nodes();
    const auto& en = ctx.eta_values();
    const double eta1 = -d * pi;
    const double eta_s = eta_log(s, d);
    // E = (1/π)[∫η/(τ − e^{s}) − PV∫η/(τ − e^{−s})]. Subtracting η(1) = −dπ from both
    // integrals leaves −η(1)·s from the logarithms plus two regular integrals.
    double outer = 0.0;
    for (std::size_t i = 0; i < sn.size(); ++i)
        outer += wn[i] * tn[i] * (en[i] - eta1) / (std::exp(s) * std::expm1(-(sn[i] + s)));
    outer += (en.back() - eta1) * std::log1p(-std::exp(-ctx.options().sigma_max - s));
    const double inner = ctx.principal_integral(s, eta_s) - eta1 * std::log(std::expm1(s));
    const double e = (-eta1 * s + outer - inner) / pi;
    const double ratio = spec.phi()(std::exp(s)) / spec.phi()(std::exp(-s));
    const double shift = std::exp(-2.0 * spec.q() * s - (d > 0 ? 2.0 * s : 0.0));
    return -shift * ratio * std::sin(eta_s) / std::sin(pi * d) * std::exp(e);
}

cplx h_kernel_complex(double s, const AnalyticContext& ctx) {
    const ProcessSpec& spec = ctx.spec();
    const double d = spec.d();
    const double t = std::exp(-s);
    const cplx outer = x_factor(cplx(std::exp(s), 0.0), ctx);
    const cplx jump = outer / x_factor_boundary(t, 1, ctx) - outer / x_factor_boundary(t, -1, ctx);
    const double ratio = spec.phi()(std::exp(s)) / spec.phi()(std::exp(-s));
    return jump * ratio * std::exp(-2.0 * spec.q() * s) / (2.0 * I * std::sin(pi * d));
}

}  // namespace longmem
