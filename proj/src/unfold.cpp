#include "satspec/unfold.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "satspec/errors.hpp"

namespace satspec {

UnfoldedSpectrum unfold(const std::vector<double>& levels, const UnfoldingParams& params) {
    const std::size_t dim = levels.size();
    if (dim < 20)
        throw InsufficientDataError("unfold: need at least 20 levels, got " + std::to_string(dim));
    if (params.poly_degree < 1 || params.poly_degree > 20)
        throw InvalidParameterError("unfold: polynomial degree out of range");
    if (!(params.edge_trim_fraction >= 0.0 && params.edge_trim_fraction < 0.5))
        throw InvalidParameterError("unfold: edge_trim_fraction must lie in [0, 0.5)");
    if (!std::is_sorted(levels.begin(), levels.end()))
        throw InvalidParameterError("unfold: levels must be ascending");

    const double lo = levels.front(), hi = levels.back();
    const double span = hi - lo;
    if (span <= 0.0) throw DegenerateSpectrumError("unfold: spectrum has zero span");

    // Least-squares fit of the cumulative staircase N(E) = #{lambda_i <= E}
    // by a polynomial in the normalized coordinate t in [-1, 1]. Only the
    // fit's shape matters for spacings; the constant offset cancels.
    const int cols = params.poly_degree + 1;
    Eigen::MatrixXd vandermonde(dim, cols);
    Eigen::VectorXd staircase(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const double t = (2.0 * levels[i] - lo - hi) / span;
        double p = 1.0;
        for (int c = 0; c < cols; ++c) {
            vandermonde(i, c) = p;
            p *= t;
        }
        staircase(i) = static_cast<double>(i + 1);
    }
    Eigen::VectorXd coeffs = vandermonde.colPivHouseholderQr().solve(staircase);

    std::vector<double> unfolded(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        unfolded[i] = vandermonde.row(i).dot(coeffs);
        // The fit is not monotone by construction; clamp the rare dips so the
        // unfolded levels stay non-decreasing.
        if (i > 0 && unfolded[i] < unfolded[i - 1]) unfolded[i] = unfolded[i - 1];
    }

    const int trim = static_cast<int>(params.edge_trim_fraction * static_cast<double>(dim));
    const std::size_t first = trim, last = dim - trim; // retained: [first, last)
    UnfoldedSpectrum out;
    out.edge_discard = trim;
    out.levels.assign(unfolded.begin() + first, unfolded.begin() + last);

    const double degeneracy_cut = params.degeneracy_tol * span;
    std::size_t degenerate = 0;
    out.spacings.reserve(out.levels.size() - 1);
    for (std::size_t i = first; i + 1 < last; ++i) {
        double spacing = unfolded[i + 1] - unfolded[i];
        if (levels[i + 1] - levels[i] < degeneracy_cut) ++degenerate;
        if (spacing < params.clamp_value) spacing = params.clamp_value;
        out.spacings.push_back(spacing);
    }
    out.degenerate_fraction =
        out.spacings.empty() ? 0.0
                             : static_cast<double>(degenerate) / static_cast<double>(out.spacings.size());
    return out;
}

} // namespace satspec
