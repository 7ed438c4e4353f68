#include "satspec/brody.hpp"

#include <algorithm>
#include <cmath>

#include "satspec/errors.hpp"
#include "satspec/rng.hpp"
#include "satspec/util.hpp"

namespace satspec {

double brody_beta(double q) {
    if (q < 0.0) throw InvalidParameterError("brody_beta: q must be non-negative");
    return std::pow(std::tgamma((2.0 + q) / (1.0 + q)), 1.0 + q);
}

double brody_pdf(double q, double delta) {
    if (q < 0.0 || delta < 0.0)
        throw InvalidParameterError("brody_pdf: arguments must be non-negative");
    const double beta = brody_beta(q);
    return (1.0 + q) * beta * std::pow(delta, q) * std::exp(-beta * std::pow(delta, 1.0 + q));
}

double brody_cdf(double q, double delta) {
    if (q < 0.0 || delta < 0.0)
        throw InvalidParameterError("brody_cdf: arguments must be non-negative");
    return 1.0 - std::exp(-brody_beta(q) * std::pow(delta, 1.0 + q));
}

SpacingSample brody_sample(double q, std::size_t count, std::uint64_t seed) {
    if (q < 0.0 || q > 1.5) throw InvalidParameterError("brody_sample: q must lie in [0, 1.5]");
    if (count < 1) throw InvalidParameterError("brody_sample: count must be positive");
    const double beta = brody_beta(q);
    auto rng = make_rng(seed);
    SpacingSample sample;
    sample.spacings.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double u = uniform01(rng);
        sample.spacings.push_back(std::pow(-std::log1p(-u) / beta, 1.0 / (1.0 + q)));
    }
    return sample;
}

double brody_log_likelihood(double q, const std::vector<double>& spacings) {
    const double beta = brody_beta(q);
    const double log_norm = std::log1p(q) + std::log(beta);
    double ll = 0.0;
    for (double d : spacings)
        ll += log_norm + q * std::log(d) - beta * std::pow(d, 1.0 + q);
    return ll;
}

BrodyFit fit_brody(const SpacingSample& sample, const FitParams& params) {
    std::vector<double> spacings = sample.spacings;
    if (spacings.empty()) throw InsufficientDataError("fit_brody: empty spacing sample");
    for (double& d : spacings) {
        if (d < 0.0 || !std::isfinite(d))
            throw InvalidParameterError("fit_brody: spacings must be finite and non-negative");
        if (d < 1e-8) d = 1e-8; // zero spacings would send the likelihood to -inf
    }

    // Golden-section maximization of the log-likelihood over [0, q_upper].
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 0.0, b = params.q_upper;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = brody_log_likelihood(x1, spacings);
    double f2 = brody_log_likelihood(x2, spacings);
    while (b - a > params.tolerance) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = brody_log_likelihood(x1, spacings);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = brody_log_likelihood(x2, spacings);
        }
    }
    const double q = 0.5 * (a + b);

    BrodyFit fit;
    fit.q = q;
    fit.beta = brody_beta(q);
    fit.log_likelihood = brody_log_likelihood(q, spacings);
    fit.sample_size = spacings.size();
    fit.valid = spacings.size() >= params.min_sample;
    return fit;
}

MaxBrodyResult max_brody(const SweepResult& sweep, const UnfoldingParams& unfold_params,
                         const FitParams& fit_params, double degenerate_exclude_above) {
    if (sweep.spectra.empty()) throw InvalidParameterError("max_brody: empty sweep");

    MaxBrodyResult result;
    result.fits.reserve(sweep.spectra.size());
    for (const Spectrum& spectrum : sweep.spectra) {
        UnfoldedSpectrum unfolded = unfold(spectrum, unfold_params);
        SpacingSample sample{unfolded.spacings, spectrum.s, sweep.seed};
        PointFit point;
        point.s = spectrum.s;
        point.degenerate_fraction = unfolded.degenerate_fraction;
        point.fit = fit_brody(sample, fit_params);
        result.fits.push_back(std::move(point));
    }

    for (const PointFit& point : result.fits) {
        if (!point.fit.valid) continue;
        if (point.degenerate_fraction > degenerate_exclude_above) continue;
        if (!result.has_valid || point.fit.q > result.q_max) {
            result.q_max = point.fit.q;
            result.s_at_max = point.s;
            result.has_valid = true;
        }
    }
    return result;
}

nlohmann::json fit_report_json(const MaxBrodyResult& result) {
    nlohmann::json j;
    j["q_max"] = result.q_max;
    j["s_at_max"] = result.s_at_max;
    j["has_valid"] = result.has_valid;
    auto fits = nlohmann::json::array();
    for (const PointFit& point : result.fits) {
        fits.push_back({{"s", point.s},
                        {"q", point.fit.q},
                        {"beta", point.fit.beta},
                        {"log_likelihood", point.fit.log_likelihood},
                        {"sample_size", point.fit.sample_size},
                        {"valid", point.fit.valid},
                        {"degenerate_fraction", point.degenerate_fraction}});
    }
    j["fits"] = std::move(fits);
    return j;
}

} // namespace satspec
