#pragma once

#include <string>

#include "satspec/brody.hpp"
#include "satspec/experiment.hpp"

namespace satspec {

/// Header: f,m,mean_q_max,stderr_q_max,median_dpll,sat_fraction,count
std::string curve_to_csv(const ComplexityCurve& curve);
ComplexityCurve curve_from_csv(const std::string& text);

/// Header: n,f,m,median_dpll,sat_fraction,count
std::string baseline_to_csv(const std::vector<BaselineRecord>& records);

/// Self-contained SVG of mean q_max vs f with stderr error bars; one circle
/// marker per point. With dpll_panel, adds a second panel of median DPLL
/// cost vs f (square markers). Throws InvalidParameterError on an empty
/// curve.
std::string curve_to_svg(const ComplexityCurve& curve, bool dpll_panel = false);

/// Spacing histogram rows: bin_left,bin_right,count,brody_density_at_fit
/// (density evaluated at bin midpoint for the fitted q).
std::string histogram_csv(const SpacingSample& sample, const BrodyFit& fit, int num_bins = 25);

void write_text_file(const std::string& text, const std::string& path);
std::string read_text_file(const std::string& path);

} // namespace satspec
