#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include <json.hpp>

#include "satspec/spectral.hpp"
#include "satspec/unfold.hpp"

namespace satspec {

/// beta(q) = Gamma((2+q)/(1+q))^(1+q). beta(0) = 1, beta(1) = pi/4.
double brody_beta(double q);

/// p_q(delta) = (1+q) beta delta^q exp(-beta delta^(1+q)), unit mean for all
/// q >= 0. Throws InvalidParameterError for negative arguments.
double brody_pdf(double q, double delta);

/// F_q(delta) = 1 - exp(-beta delta^(1+q)).
double brody_cdf(double q, double delta);

/// Unit-mean nearest-neighbor spacings with provenance.
struct SpacingSample {
    std::vector<double> spacings;
    double s = 0.0;
    std::uint64_t instance_id = 0;
};

/// i.i.d. draws via the inverse CDF delta = (-ln(1-u)/beta)^(1/(1+q)).
/// Deterministic under seed. q must lie in [0, 1.5].
SpacingSample brody_sample(double q, std::size_t count, std::uint64_t seed);

struct BrodyFit {
    double q = 0.0;
    double beta = 1.0;
    double log_likelihood = 0.0;
    /// False when the sample is too small for the fit to mean anything;
    /// q is still reported.
    bool valid = false;
    std::size_t sample_size = 0;
};

struct FitParams {
    std::size_t min_sample = 50;
    /// Upper end of the q search interval; slight super-Wigner fits from
    /// noise are reported as-is rather than clipped.
    double q_upper = 1.5;
    double tolerance = 1e-4;
};

/// Maximum-likelihood q by golden-section search on the (empirically
/// unimodal) log-likelihood over [0, q_upper]. Throws InsufficientDataError
/// on an empty sample.
BrodyFit fit_brody(const SpacingSample& sample, const FitParams& params = {});

/// log L(q) for the sample; exposed for the likelihood sanity checks.
double brody_log_likelihood(double q, const std::vector<double>& spacings);

/// Per-grid-point fit with its unfolding diagnostics.
struct PointFit {
    double s = 0.0;
    BrodyFit fit;
    double degenerate_fraction = 0.0;
};

struct MaxBrodyResult {
    double q_max = 0.0;
    double s_at_max = 0.0;
    /// False when no grid point produced a valid fit (q_max forced to 0).
    bool has_valid = false;
    std::vector<PointFit> fits;
};

/// Unfold + fit at every grid point of the sweep; q_max is the maximum q over
/// valid fits. Points whose degenerate_fraction exceeds
/// degenerate_exclude_above are reported but skipped in the maximum.
/// Unfolding errors propagate.
MaxBrodyResult max_brody(const SweepResult& sweep, const UnfoldingParams& unfold_params = {},
                         const FitParams& fit_params = {},
                         double degenerate_exclude_above = std::numeric_limits<double>::infinity());

/// Fit report rows {s, q, beta, log_likelihood, sample_size, valid,
/// degenerate_fraction} plus the maximum.
nlohmann::json fit_report_json(const MaxBrodyResult& result);

} // namespace satspec
