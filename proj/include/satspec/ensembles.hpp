#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "satspec/brody.hpp"
#include "satspec/spectral.hpp"
#include "satspec/unfold.hpp"

namespace satspec {

struct RmtEnsembleConfig {
    int beta_class = 1; // 1 = GOE (real symmetric), 2 = GUE (complex Hermitian)
    int dim = 2;
    double omega = 1.0; // sets the entry scale: var(H_ij) = omega^2/2 off-diagonal (GOE)
    int samples = 1;
    std::uint64_t seed = 0;
};

/// GOE draw: independent Gaussians with variance omega^2 (diagonal) and
/// omega^2/2 (off-diagonal), symmetrized.
Eigen::MatrixXd sample_goe(int dim, double omega, std::mt19937_64& rng);

/// GUE draw: diagonal variance omega^2/2 real; off-diagonal real and
/// imaginary parts each with variance omega^2/4.
Eigen::MatrixXcd sample_gue(int dim, double omega, std::mt19937_64& rng);

/// One-parameter Gaussian process realized as
///   H(x) = cos(x) H1 + sin(x) H2,  H1, H2 independent ensemble draws,
/// which has correlation f(x - x') = cos(x - x') and f(0) = 1.
struct GpFamily {
    std::vector<double> x_grid;
    std::vector<Eigen::MatrixXd> matrices;
    static double correlation(double dx) { return std::cos(dx); }
};

struct GpFamilyHermitian {
    std::vector<double> x_grid;
    std::vector<Eigen::MatrixXcd> matrices;
    static double correlation(double dx) { return std::cos(dx); }
};

/// beta_class must be 1; x_grid must be strictly increasing and span less
/// than one period (2 pi).
GpFamily sample_gp_family(const RmtEnsembleConfig& config, const std::vector<double>& x_grid);
GpFamilyHermitian sample_gp_family_hermitian(const RmtEnsembleConfig& config,
                                             const std::vector<double>& x_grid);

/// Unfolded levels of a parametric family: levels[k][i] is the i-th retained
/// unfolded level at grid point k. Level index aligns across grid points
/// (equal dimension, equal trim).
struct LevelFlow {
    std::vector<double> x_grid;
    std::vector<std::vector<double>> levels;
};

LevelFlow unfolded_flow(const GpFamily& family, const UnfoldingParams& params = {});
LevelFlow unfolded_flow(const GpFamilyHermitian& family, const UnfoldingParams& params = {});
LevelFlow unfolded_flow(const SweepResult& sweep, const UnfoldingParams& params = {});

/// sqrt of the mean squared level velocity d(eps_i)/dx, central differences
/// in the interior and one-sided at the ends, averaged over levels and grid
/// points. Rescaling the grid as x -> scale * x brings the mean squared
/// velocity to unity. Throws InsufficientDataError for fewer than 2 points.
double velocity_scale(const LevelFlow& flow);

/// The universal rescaling: returns the flow with x_grid multiplied by scale.
LevelFlow rescale_flow(const LevelFlow& flow, double scale);

/// Samples GOE matrices, runs each through unfold, pools the spacings and
/// fits the Brody form. Calibration: should land near q = 1. dim >= 64.
BrodyFit goe_pipeline_check(int dim, int samples, std::uint64_t seed,
                            const UnfoldingParams& unfold_params = {},
                            const FitParams& fit_params = {});

/// Same pipeline on diagonal matrices with i.i.d. uniform entries
/// (uncorrelated levels). Should land near q = 0.
BrodyFit poisson_pipeline_check(int dim, int samples, std::uint64_t seed,
                                const UnfoldingParams& unfold_params = {},
                                const FitParams& fit_params = {});

/// Calibration report for the gp-validate CLI:
/// {goe_q, poisson_q, covariance_checks: [...], rescale_idempotence}.
nlohmann::json gp_validation_report(int dim, int samples, std::uint64_t seed);

} // namespace satspec
