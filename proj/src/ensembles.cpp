#include "satspec/ensembles.hpp"

#include <cmath>

#include "satspec/errors.hpp"
#include "satspec/rng.hpp"
#include "satspec/util.hpp"

namespace satspec {

Eigen::MatrixXd sample_goe(int dim, double omega, std::mt19937_64& rng) {
    if (dim < 2) throw InvalidParameterError("sample_goe: dim must be >= 2");
    Eigen::MatrixXd h(dim, dim);
    const double off_sigma = omega / std::sqrt(2.0);
    for (int i = 0; i < dim; ++i) {
        h(i, i) = omega * normal(rng);
        for (int j = i + 1; j < dim; ++j) {
            const double v = off_sigma * normal(rng);
            h(i, j) = v;
            h(j, i) = v;
        }
    }
    return h;
}

Eigen::MatrixXcd sample_gue(int dim, double omega, std::mt19937_64& rng) {
    if (dim < 2) throw InvalidParameterError("sample_gue: dim must be >= 2");
    Eigen::MatrixXcd h(dim, dim);
    const double diag_sigma = omega / std::sqrt(2.0);
    const double off_sigma = omega / 2.0;
    for (int i = 0; i < dim; ++i) {
        h(i, i) = diag_sigma * normal(rng);
        for (int j = i + 1; j < dim; ++j) {
            const std::complex<double> v(off_sigma * normal(rng), off_sigma * normal(rng));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

namespace {

void check_gp_grid(const std::vector<double>& x_grid) {
    if (x_grid.size() < 1) throw InvalidParameterError("sample_gp_family: empty grid");
    for (std::size_t k = 1; k < x_grid.size(); ++k)
        if (!(x_grid[k] > x_grid[k - 1]))
            throw InvalidParameterError("sample_gp_family: grid must be strictly increasing");
    if (x_grid.back() - x_grid.front() >= 2.0 * M_PI)
        throw InvalidParameterError("sample_gp_family: grid must span less than one period");
}

} // namespace

GpFamily sample_gp_family(const RmtEnsembleConfig& config, const std::vector<double>& x_grid) {
    if (config.beta_class != 1)
        throw InvalidParameterError("sample_gp_family: beta_class must be 1 (use the hermitian variant)");
    check_gp_grid(x_grid);
    auto rng = make_rng(config.seed);
    const Eigen::MatrixXd h1 = sample_goe(config.dim, config.omega, rng);
    const Eigen::MatrixXd h2 = sample_goe(config.dim, config.omega, rng);
    GpFamily family;
    family.x_grid = x_grid;
    family.matrices.reserve(x_grid.size());
    for (double x : x_grid)
        family.matrices.push_back(std::cos(x) * h1 + std::sin(x) * h2);
    return family;
}

GpFamilyHermitian sample_gp_family_hermitian(const RmtEnsembleConfig& config,
                                             const std::vector<double>& x_grid) {
    if (config.beta_class != 2)
        throw InvalidParameterError("sample_gp_family_hermitian: beta_class must be 2");
    check_gp_grid(x_grid);
    auto rng = make_rng(config.seed);
    const Eigen::MatrixXcd h1 = sample_gue(config.dim, config.omega, rng);
    const Eigen::MatrixXcd h2 = sample_gue(config.dim, config.omega, rng);
    GpFamilyHermitian family;
    family.x_grid = x_grid;
    family.matrices.reserve(x_grid.size());
    for (double x : x_grid)
        family.matrices.push_back(std::cos(x) * h1 + std::sin(x) * h2);
    return family;
}

namespace {

template <typename MatrixList>
LevelFlow flow_from_matrices(const std::vector<double>& x_grid, const MatrixList& matrices,
                             const UnfoldingParams& params) {
    LevelFlow flow;
    flow.x_grid = x_grid;
    flow.levels.reserve(matrices.size());
    for (const auto& matrix : matrices) {
        Eigen::SelfAdjointEigenSolver<std::decay_t<decltype(matrix)>> solver(matrix,
                                                                             Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw NumericFailureError("unfolded_flow: eigensolver failed");
        std::vector<double> ev(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + solver.eigenvalues().size());
        flow.levels.push_back(unfold(ev, params).levels);
    }
    return flow;
}

} // namespace

LevelFlow unfolded_flow(const GpFamily& family, const UnfoldingParams& params) {
    return flow_from_matrices(family.x_grid, family.matrices, params);
}

LevelFlow unfolded_flow(const GpFamilyHermitian& family, const UnfoldingParams& params) {
    return flow_from_matrices(family.x_grid, family.matrices, params);
}

LevelFlow unfolded_flow(const SweepResult& sweep, const UnfoldingParams& params) {
    LevelFlow flow;
    flow.x_grid = sweep.s_grid;
    flow.levels.reserve(sweep.spectra.size());
    for (const Spectrum& spectrum : sweep.spectra)
        flow.levels.push_back(unfold(spectrum, params).levels);
    return flow;
}

double velocity_scale(const LevelFlow& flow) {
    const std::size_t points = flow.x_grid.size();
    if (points < 2)
        throw InsufficientDataError("velocity_scale: need at least 2 grid points");
    if (flow.levels.size() != points)
        throw InvalidParameterError("velocity_scale: levels/grid length mismatch");
    const std::size_t num_levels = flow.levels.front().size();
    for (const auto& column : flow.levels)
        if (column.size() != num_levels)
            throw InvalidParameterError("velocity_scale: level count varies across the grid");
    if (num_levels == 0) throw InsufficientDataError("velocity_scale: no levels");

    double sum_sq = 0.0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < points; ++k) {
        // central differences in the interior, one-sided at the ends
        const std::size_t lo = k == 0 ? 0 : k - 1;
        const std::size_t hi = k + 1 == points ? k : k + 1;
        const double dx = flow.x_grid[hi] - flow.x_grid[lo];
        for (std::size_t i = 0; i < num_levels; ++i) {
            const double v = (flow.levels[hi][i] - flow.levels[lo][i]) / dx;
            sum_sq += v * v;
            ++count;
        }
    }
    return std::sqrt(sum_sq / static_cast<double>(count));
}

LevelFlow rescale_flow(const LevelFlow& flow, double scale) {
    if (!(scale > 0.0)) throw InvalidParameterError("rescale_flow: scale must be positive");
    LevelFlow out = flow;
    for (double& x : out.x_grid) x *= scale;
    return out;
}

BrodyFit goe_pipeline_check(int dim, int samples, std::uint64_t seed,
                            const UnfoldingParams& unfold_params, const FitParams& fit_params) {
    if (dim < 64) throw InvalidParameterError("goe_pipeline_check: dim must be >= 64");
    if (samples < 1) throw InvalidParameterError("goe_pipeline_check: samples must be >= 1");
    SpacingSample pooled;
    for (int k = 0; k < samples; ++k) {
        auto rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
        Eigen::MatrixXd h = sample_goe(dim, 1.0, rng);
        UnfoldedSpectrum u = unfold(eigenvalues_symmetric(h), unfold_params);
        pooled.spacings.insert(pooled.spacings.end(), u.spacings.begin(), u.spacings.end());
    }
    return fit_brody(pooled, fit_params);
}

BrodyFit poisson_pipeline_check(int dim, int samples, std::uint64_t seed,
                                const UnfoldingParams& unfold_params, const FitParams& fit_params) {
    if (dim < 20) throw InvalidParameterError("poisson_pipeline_check: dim must be >= 20");
    if (samples < 1) throw InvalidParameterError("poisson_pipeline_check: samples must be >= 1");
    SpacingSample pooled;
    for (int k = 0; k < samples; ++k) {
        auto rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
        for (int i = 0; i < dim; ++i) h(i, i) = static_cast<double>(dim) * uniform01(rng);
        UnfoldedSpectrum u = unfold(eigenvalues_symmetric(h), unfold_params);
        pooled.spacings.insert(pooled.spacings.end(), u.spacings.begin(), u.spacings.end());
    }
    return fit_brody(pooled, fit_params);
}

nlohmann::json gp_validation_report(int dim, int samples, std::uint64_t seed) {
    nlohmann::json report;

    report["goe_q"] = goe_pipeline_check(dim, samples, seed).q;
    report["poisson_q"] = poisson_pipeline_check(dim, samples, derive_seed(seed, 1)).q;

    // Sample-covariance checks of the GP second moment at three grid
    // separations, against omega^2/2 * cos(dx) for an off-diagonal entry.
    const double omega = 1.0;
    const int cov_dim = 16;
    const int families = 10000;
    const std::vector<double> xs = {0.0, M_PI / 3.0, M_PI / 2.0};
    auto checks = nlohmann::json::array();
    for (std::size_t pair = 1; pair < xs.size(); ++pair) {
        std::vector<double> products;
        products.reserve(families);
        for (int k = 0; k < families; ++k) {
            RmtEnsembleConfig config{1, cov_dim, omega, 1, derive_seed(seed, 2 + pair, k)};
            GpFamily family = sample_gp_family(config, {xs[0], xs[pair]});
            products.push_back(family.matrices[0](0, 1) * family.matrices[1](0, 1));
        }
        const double expected = 0.5 * omega * omega * GpFamily::correlation(xs[pair] - xs[0]);
        const double measured = mean(products);
        const double sigma = stderr_of_mean(products);
        checks.push_back({{"x", xs[0]},
                          {"x_prime", xs[pair]},
                          {"expected", expected},
                          {"measured", measured},
                          {"stderr", sigma},
                          {"within_3_sigma", std::abs(measured - expected) <= 3.0 * sigma}});
    }
    report["covariance_checks"] = std::move(checks);

    // Rescaling idempotence on a small family.
    std::vector<double> grid(9);
    for (std::size_t k = 0; k < grid.size(); ++k)
        grid[k] = 0.5 * static_cast<double>(k) / (grid.size() - 1);
    RmtEnsembleConfig config{1, 64, 1.0, 1, derive_seed(seed, 99)};
    LevelFlow flow = unfolded_flow(sample_gp_family(config, grid));
    const double scale = velocity_scale(flow);
    const double rescaled = velocity_scale(rescale_flow(flow, scale));
    report["rescale_idempotence"] = rescaled;

    return report;
}

} // namespace satspec
