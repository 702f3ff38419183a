#include "longmem/io.hpp"

#include "longmem/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>

namespace longmem {

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

json to_json(const ProcessSpec& spec) {
    return json{{"d", spec.d()}, {"theta", spec.theta().coeffs()}, {"phi", spec.phi().coeffs()}};
}

ProcessSpec spec_from_json(const json& j) {
    if (!j.contains("d")) throw DomainError("process specification needs a \"d\" field");
    return ProcessSpec(j.at("d").get<double>(), j.value("theta", std::vector<double>{1.0}),
                       j.value("phi", std::vector<double>{1.0}));
}

json to_json(const SpectralConstants& c) {
    return json{{"sigma0_sq", c.sigma0_sq}, {"sigma_sq", c.sigma_sq}, {"c_d", c.c_d}};
}

json to_json(const LambdaMu& lm) {
    return json{{"d", lm.d},
                {"lambda0_numeric", lm.lambda0_numeric},
                {"lambda0_closed", lm.lambda0_closed},
                {"mu0_numeric", lm.mu0_numeric},
                {"mu0_closed", lm.mu0_closed},
                {"rel_err", lm.rel_err}};
}

json to_json(const HilbertReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(json{{"name", c.name},
                              {"points", c.points},
                              {"residuals", c.residuals},
                              {"tolerance", c.tolerance},
                              {"pass", c.pass}});
    return json{{"n", r.n}, {"d", r.d}, {"all_pass", r.all_pass()}, {"checks", checks}};
}

void write_covariance_csv(std::ostream& os, const CovarianceTable& cov) {
    os << "k,gamma\n";
    for (int k = 0; k <= cov.n_max; ++k) os << k << ',' << format_number(cov(k)) << '\n';
}

void write_trace_csv(std::ostream& os, const PredictorTrace& trace, double sigma_sq) {
    os << "n,alpha,sigma2,n_alpha,n_delta_over_sigma2\n";
    for (int n = 1; n <= trace.n_max; ++n) {
        const double a = trace.alpha(n), s = trace.sigma_sq(n);
        os << n << ',' << format_number(a) << ',' << format_number(s) << ',' << format_number(n * a) << ','
           << format_number(n * (s - sigma_sq) / sigma_sq) << '\n';
    }
}

void write_density_csv(std::ostream& os, const ProcessSpec& spec, int points) {
    os << "lambda,f0,f\n";
    for (int i = 1; i <= points; ++i) {
        const double lam = std::numbers::pi * i / points;
        os << format_number(lam) << ',' << format_number(fgn_density(spec.d(), lam)) << ','
           << format_number(composed_density(spec, lam)) << '\n';
    }
}

void write_solution_csv(std::ostream& os, const InteqSolution& sol) {
    os << "t,value\n";
    for (std::size_t k = 0; k < sol.nodes.size(); ++k)
        os << format_number(sol.nodes[k]) << ',' << format_number(sol.values[k]) << '\n';
}

std::filesystem::path analytic_cache_path(const std::filesystem::path& dir, double d, const AnalyticOptions& o) {
    return dir / ("analytic_d" + format_number(d) + "_o" + std::to_string(o.order) + "_r" + format_number(o.ratio) +
                  "_f" + format_number(o.finest) + "_s" + format_number(o.sigma_max) + "_w" + format_number(o.width) +
                  ".json");
}

void save_analytic_cache(const std::filesystem::path& dir, const AnalyticContext& ctx) {
    std::filesystem::create_directories(dir);
    const auto& o = ctx.options();
    json j{{"d", ctx.d()},
           {"grid", {{"order", o.order}, {"ratio", o.ratio}, {"finest", o.finest}, {"sigma_max", o.sigma_max}, {"width", o.width}}},
           {"eta", ctx.eta_values()},
           {"psi0", ctx.psi0()}};
    if (ctx.s0()) j["s0"] = *ctx.s0();
    const auto path = analytic_cache_path(dir, ctx.d(), o);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream os(tmp);
        if (!os) throw std::runtime_error("cannot write analytic cache " + tmp);
        os << j.dump();
    }
    std::filesystem::rename(tmp, path);
}

std::optional<AnalyticCache> load_analytic_cache(const std::filesystem::path& dir, double d,
                                                 const AnalyticOptions& options) {
    std::ifstream is(analytic_cache_path(dir, d, options));
    if (!is) return std::nullopt;
    try {
        const json j = json::parse(is);
        if (j.at("d").get<double>() != d) return std::nullopt;
        AnalyticCache c;
        c.eta_values = j.at("eta").get<std::vector<double>>();
        if (j.contains("s0")) c.s0 = j.at("s0").get<double>();
        return c;
    } catch (const json::exception&) {
        return std::nullopt;
    }
}

AnalyticContext make_context(const ProcessSpec& spec, const AnalyticOptions& options) {
    const char* dir = std::getenv("LONGMEM_CACHE");
    if (!dir || !*dir) return AnalyticContext(spec, options);
    const auto cache = load_analytic_cache(dir, spec.d(), options);
    AnalyticContext ctx(spec, options, cache ? &*cache : nullptr);
    if (!cache) save_analytic_cache(dir, ctx);
    return ctx;
}

}  // namespace longmem
