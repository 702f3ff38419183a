#include "longmem/acceptance.hpp"
#include "longmem/analytic.hpp"
#include "longmem/asympt.hpp"
#include "longmem/errors.hpp"
#include "longmem/hilbert_verify.hpp"
#include "longmem/inteq.hpp"
#include "longmem/io.hpp"
#include "longmem/predictor.hpp"
#include "longmem/process.hpp"
#include "longmem/spectral.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>

using namespace longmem;

namespace {

struct Options {
    double d = 0.25;
    std::vector<double> theta{1.0};
    std::vector<double> phi{1.0};
    int n_max = 0;
    std::vector<int> n_grid;
    std::string out;
    std::string format;
    std::string precision = "double";
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::runtime_error("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

ProcessSpec make_spec(const Options& o) { return ProcessSpec(o.d, o.theta, o.phi); }

std::vector<int> grid_or(const Options& o, std::vector<int> fallback) {
    return o.n_grid.empty() ? fallback : o.n_grid;
}

void emit_json(const Options& o, const json& j) {
    Output out(o.out);
    out.stream() << j.dump(2) << '\n';
}

int cmd_predict(const Options& o) {
    const ProcessSpec spec = make_spec(o);
    const int n_max = o.n_max > 0 ? o.n_max : 4096;
    const PredictorTrace tr = levinson(arima_covariance(spec, n_max), n_max,
                                       o.precision == "dd" ? Precision::double_double : Precision::double_precision);
    const double s2 = szego_constants(spec).sigma_sq;
    if (o.format == "json") {
        json rows = json::array();
        for (int n = 1; n <= n_max; ++n)
            rows.push_back({{"n", n}, {"alpha", tr.alpha(n)}, {"sigma2", tr.sigma_sq(n)}});
        emit_json(o, {{"spec", to_json(spec)}, {"sigma_sq", s2}, {"trace", rows}});
    } else {
        Output out(o.out);
        write_trace_csv(out.stream(), tr, s2);
    }
    return 0;
}

int cmd_spectral(const Options& o) {
    const ProcessSpec spec = make_spec(o);
    if (o.format == "csv") {
        Output out(o.out);
        write_density_csv(out.stream(), spec, o.n_max > 0 ? o.n_max : 512);
    } else {
        emit_json(o, {{"spec", to_json(spec)}, {"constants", to_json(szego_constants(spec))}});
    }
    return 0;
}

int cmd_analytic(const Options& o) {
    const ProcessSpec spec = make_spec(o);
    const AnalyticContext ctx = make_context(spec);
    const double d = spec.d();
    double boundary = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double lam = std::numbers::pi * (i + 0.5) / 50.0;
        boundary = std::max(boundary, std::abs(q_extension(std::polar(1.0, lam), d) / fgn_density(d, lam) - 1.0));
    }
    const double psi_check = ctx.psi0() * ctx.sigma0_sq() / (2.0 * std::numbers::pi);
    json j{{"d", d},
           {"sigma0_sq", ctx.sigma0_sq()},
           {"psi0", ctx.psi0()},
           {"psi0_sigma0_sq_over_2pi", psi_check},
           {"boundary_identity_max_rel_err", boundary},
           {"eta_nodes", ctx.s_nodes().size()}};
    if (ctx.s0()) j["s0"] = *ctx.s0();
    json h = json::array();
    for (double s : {1e-4, 1e-2, 0.1, 1.0, 4.0}) h.push_back({{"s", s}, {"h", h_kernel(s, ctx)}});
    j["h_kernel"] = h;
    emit_json(o, j);
    return boundary < 1e-8 && std::abs(psi_check - 1.0) < 1e-6 ? 0 : 1;
}

int cmd_inteq(const Options& o) {
    const double d = o.d;
    const auto [q1, p1] = solve_q1_p1(d);
    LambdaMu lm;
    int code = 0;
    try {
        lm = lambda_mu_constants(d, q1, p1);
    } catch (const ConvergenceError&) {
        code = 1;
    }
    if (o.format == "csv") {
        Output out(o.out);
        write_solution_csv(out.stream(), q1);
        return code;
    }
    json j = to_json(lm);
    if (!o.n_grid.empty()) {
        const AnalyticContext ctx = make_context(make_spec(o));
        json rows = json::array();
        for (int n : o.n_grid) {
            const HorizonKernel kernel(n, ctx);
            const auto [u, w] = solve_uw(0, kernel);
            const SDValue v = sd_evaluate(-1.0, kernel, u, w);
            rows.push_back({{"n", n}, {"n_S0_minus_1", n * (v.S.real() - 1.0)}, {"n_D0_minus_1", n * (v.D.real() - 1.0)}});
        }
        j["sd_at_minus_one"] = rows;
        j["sd_limit_S"] = -d * (1.0 + d) / 2.0;
        j["sd_limit_D"] = d * (1.0 - d) / 2.0;
    }
    emit_json(o, j);
    return code;
}

int cmd_asympt(const Options& o) {
    const ProcessSpec spec = make_spec(o);
    const AnalyticContext ctx = make_context(spec);
    const std::vector<int> grid = grid_or(o, {256, 512, 1024});
    const int n_top = *std::max_element(grid.begin(), grid.end());
    const PredictorTrace tr = levinson(arima_covariance(spec, n_top), n_top);
    const TrustThreshold trust = find_trusted_order(ctx, {2, 4, 8, 16, 32, 64, 128, 256});
    json rows = json::array();
    int code = 0;
    for (int n : grid) {
        const ABSolution s = solve_ab_systems(ctx, n);
        const Prediction p = predicted_asymptotics(spec, n, ctx.sigma0_sq());
        const SecondOrder so = second_order_coefficients(s, ctx);
        rows.push_back({{"n", n},
                        {"a_last", s.a_last},
                        {"b_last", s.b_last},
                        {"sigma2_exact", tr.sigma_sq(n)},
                        {"sigma2_recombined", s.sigma2},
                        {"alpha_exact", tr.alpha(n)},
                        {"alpha_recombined", s.alpha},
                        {"alpha_predicted", p.alpha},
                        {"n_a_coeff", so.a_coeff},
                        {"n_b_coeff", so.b_coeff},
                        {"cond_a", s.cond_a},
                        {"cond_b", s.cond_b}});
        if (std::abs(s.sigma2 / tr.sigma_sq(n) - 1.0) >= 5e-3 || std::abs(s.alpha / tr.alpha(n) - 1.0) >= 5e-2) code = 1;
    }
    json meta{{"spec", to_json(spec)}, {"a_coeff_limit", spec.d() * (1 + spec.d())}, {"b_coeff_limit", spec.d() * (1 - spec.d())}};
    meta["n0"] = trust.n0 ? json(*trust.n0) : json(nullptr);
    emit_json(o, {{"metadata", meta}, {"results", rows}});
    return code;
}

int cmd_verify(const Options& o) {
    const ProcessSpec spec = make_spec(o);
    const AnalyticContext ctx = make_context(spec);
    const int n = o.n_max > 0 ? o.n_max : 32;
    const GeneratingBundle b = build_bundle(spec, n);
    const HilbertReport rep = check_hilbert_conditions(b, ctx);
    json j = to_json(rep);
    j["sigma2_levinson"] = b.sigma2;
    j["alpha_levinson"] = b.alpha;
    j["form_residual"] = b.form_residual;
    emit_json(o, j);
    return rep.all_pass() ? 0 : 1;
}

int cmd_appendix_e(const Options& o) {
    const double d = o.d;
    if (!(d < 0.0 && d > -0.5)) throw DomainError("appendix_e needs d in (-1/2, 0)");
    const ProcessSpec spec(d, {1.0, 1.0}, o.phi);
    const int n_max = o.n_max > 0 ? o.n_max : 1024;
    const PredictorTrace tr = levinson(arima_covariance(spec, n_max), n_max);
    const double s0 = szego_constants(ProcessSpec(d)).sigma0_sq;
    Output out(o.out);
    std::ostream& os = out.stream();
    os << "n,parity,alpha,alpha_predicted,n_alpha,n_alpha_target,n_delta_over_sigma0_sq\n";
    for (int n = 2; n <= n_max; ++n) {
        const bool even = n % 2 == 0;
        const double target = d - (even ? 1.0 : -1.0);
        os << n << ',' << (even ? "even" : "odd") << ',' << format_number(tr.alpha(n)) << ','
           << format_number(target / n) << ',' << format_number(n * tr.alpha(n)) << ',' << format_number(target) << ','
           << format_number(n * (tr.sigma_sq(n) - s0) / s0) << '\n';
    }
    int code = 0;
    for (int n : {n_max - 1, n_max}) {
        const double target = d - (n % 2 == 0 ? 1.0 : -1.0);
        if (std::abs(n * tr.alpha(n) - target) > 8.0 / n) code = 1;
    }
    return code;
}

int cmd_all(const Options& o) {
    const auto results = run_acceptance();
    json rows = json::array();
    bool ok = true;
    for (const auto& r : results) {
        rows.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
        ok = ok && r.pass;
    }
    emit_json(o, {{"all_pass", ok}, {"criteria", rows}});
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite predictors and Hilbert-problem asymptotics for fGn-driven ARIMA-type sequences"};
    app.require_subcommand(1);
    Options o;

    const auto add_common = [&](CLI::App* sub, const std::string& default_format) {
        sub->add_option("--d", o.d, "memory parameter d in (-1/2, 1/2), d != 0");
        sub->add_option("--theta", o.theta, "MA coefficients, constant term first")->delimiter(',');
        sub->add_option("--phi", o.phi, "AR coefficients, constant term first")->delimiter(',');
        sub->add_option("--n-max", o.n_max, "largest order n")->check(CLI::PositiveNumber);
        sub->add_option("--n-grid", o.n_grid, "comma-separated increasing list of orders")->delimiter(',');
        sub->add_option("--out", o.out, "output file (stdout when omitted)");
        sub->add_option("--format", o.format, "csv or json (default " + default_format + ")")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--precision", o.precision, "double or dd")->check(CLI::IsMember({"double", "dd"}));
    };

    struct Command {
        const char* name;
        const char* help;
        const char* format;
        int (*run)(const Options&);
    };
    const Command commands[] = {
        {"predict", "Levinson trace of alpha(n), sigma^2(n)", "csv", cmd_predict},
        {"spectral", "Szego constants or density table", "json", cmd_spectral},
        {"analytic", "analytic context summary and boundary identity", "json", cmd_analytic},
        {"inteq", "lambda0/mu0 constants and S/D values", "json", cmd_inteq},
        {"asympt", "a/b systems against Levinson and the asymptotic prediction", "json", cmd_asympt},
        {"verify", "Hilbert-problem conditions for an exact predictor", "json", cmd_verify},
        {"appendix_e", "parity-split table for the MA polynomial 1 + z", "csv", cmd_appendix_e},
        {"all", "full acceptance suite", "json", cmd_all},
    };
    int (*selected)(const Options&) = nullptr;
    std::string selected_format;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        add_common(sub, c.format);
        sub->callback([&, c] {
            selected = c.run;
            selected_format = c.format;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    for (std::size_t i = 1; i < o.n_grid.size(); ++i)
        if (o.n_grid[i] <= o.n_grid[i - 1]) {
            std::cerr << "--n-grid must be strictly increasing\n";
            return 2;
        }
    if (o.format.empty()) o.format = selected_format;
    try {
        return selected(o);
    } catch (const DomainError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
