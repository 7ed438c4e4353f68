#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "satspec/aqc.hpp"

namespace satspec {

/// Full eigenvalue spectrum of H(s) at one interpolation point, ascending.
struct Spectrum {
    double s = 0.0;
    std::vector<double> eigenvalues;
};

/// Spectra over the interpolation grid s_k = k/(num_points-1), endpoints
/// included. Instance metadata travels with the spectra so downstream fits
/// stay attributable.
struct SweepResult {
    int n = 0;
    int m = 0;
    double f = 0.0;
    std::uint64_t seed = 0;
    std::vector<double> s_grid;
    std::vector<Spectrum> spectra;
};

/// All eigenvalues of a real symmetric matrix, ascending
/// (Householder tridiagonalization + implicit QL/QR via Eigen).
/// Throws InvalidParameterError on non-finite entries and
/// NumericFailureError on non-convergence.
std::vector<double> eigenvalues_symmetric(const SymmetricMatrix& matrix);

/// Diagonalizes H(s) on the uniform grid. Each spectrum is checked against
/// the trace of H(s) to 1e-9 * dim * max|eigenvalue|; a violation raises
/// NumericFailureError naming the grid point. seed_label is carried into the
/// result metadata only.
SweepResult sweep(const AqcSystem& system, int num_points, std::uint64_t seed_label = 0);

/// Canonical interchange JSON: {n, m, f, seed, s_grid, spectra}.
nlohmann::json sweep_to_json(const SweepResult& result);
SweepResult sweep_from_json(const nlohmann::json& j);

void write_sweep_file(const SweepResult& result, const std::string& path);
SweepResult read_sweep_file(const std::string& path);

} // namespace satspec
