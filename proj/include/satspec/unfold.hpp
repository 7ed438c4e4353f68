#pragma once

#include <vector>

#include "satspec/spectral.hpp"

namespace satspec {

struct UnfoldingParams {
    int poly_degree = 6;
    double edge_trim_fraction = 0.05;
    /// Raw spacings below degeneracy_tol * (lambda_max - lambda_min) count as
    /// exact degeneracies; their unfolded spacing is clamped to clamp_value
    /// and retained.
    double degeneracy_tol = 1e-10;
    double clamp_value = 1e-8;
};

/// A spectrum rescaled to unit mean level density. `levels` are the retained
/// (edge-trimmed) unfolded levels; `spacings` their consecutive differences
/// with degenerate pairs clamped.
struct UnfoldedSpectrum {
    std::vector<double> levels;
    std::vector<double> spacings;
    double degenerate_fraction = 0.0;
    int edge_discard = 0;
};

/// Least-squares polynomial fit of the cumulative staircase N(E), evaluated
/// at the level positions; unfolded level e_i = Nbar(lambda_i). Trims
/// edge_trim_fraction of levels from each end before extracting spacings.
///
/// Throws InsufficientDataError below 20 levels and DegenerateSpectrumError
/// when the spectrum has zero span.
UnfoldedSpectrum unfold(const std::vector<double>& levels, const UnfoldingParams& params = {});

inline UnfoldedSpectrum unfold(const Spectrum& spectrum, const UnfoldingParams& params = {}) {
    return unfold(spectrum.eigenvalues, params);
}

} // namespace satspec
