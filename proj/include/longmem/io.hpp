#pragma once

#include "longmem/analytic.hpp"
#include "longmem/asympt.hpp"
#include "longmem/hilbert_verify.hpp"
#include "longmem/inteq.hpp"
#include "longmem/predictor.hpp"
#include "longmem/process.hpp"
#include "longmem/spectral.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace longmem {

using json = nlohmann::ordered_json;

// Shortest decimal that round-trips to the same double; locale independent.
std::string format_number(double x);

json to_json(const ProcessSpec& spec);
ProcessSpec spec_from_json(const json& j);

json to_json(const SpectralConstants& c);
json to_json(const LambdaMu& lm);
json to_json(const HilbertReport& r);

void write_covariance_csv(std::ostream& os, const CovarianceTable& cov);
// Columns n, alpha, sigma2, n_alpha, n_delta_over_sigma2 with δ(n) = σ²(n) − σ².
void write_trace_csv(std::ostream& os, const PredictorTrace& trace, double sigma_sq);
void write_density_csv(std::ostream& os, const ProcessSpec& spec, int points);
void write_solution_csv(std::ostream& os, const InteqSolution& sol);

// Analytic-context sidecar keyed by d and the η-grid options; stored as JSON in `dir`.
std::filesystem::path analytic_cache_path(const std::filesystem::path& dir, double d, const AnalyticOptions& options);
void save_analytic_cache(const std::filesystem::path& dir, const AnalyticContext& ctx);
std::optional<AnalyticCache> load_analytic_cache(const std::filesystem::path& dir, double d,
                                                 const AnalyticOptions& options);

// Context construction that consults the cache directory named by LONGMEM_CACHE when set.
AnalyticContext make_context(const ProcessSpec& spec, const AnalyticOptions& options = {});

}  // namespace longmem
