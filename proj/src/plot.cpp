#include "satspec/plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "satspec/errors.hpp"
#include "satspec/util.hpp"

namespace satspec {

namespace {

constexpr const char* kCurveHeader = "f,m,mean_q_max,stderr_q_max,median_dpll,sat_fraction,count";

double parse_field(const std::string& field, int line) {
    double value = 0.0;
    auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size())
        throw ParseError("bad numeric field '" + field + "'", line);
    return value;
}

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(current);
    return fields;
}

} // namespace

std::string curve_to_csv(const ComplexityCurve& curve) {
    std::string out = std::string(kCurveHeader) + "\n";
    for (const CurveRecord& rec : curve.records) {
        out += fmt_double(rec.f) + "," + std::to_string(rec.m) + "," + fmt_double(rec.mean_q_max) +
               "," + fmt_double(rec.stderr_q_max) + "," + fmt_double(rec.median_dpll_decisions) +
               "," + fmt_double(rec.sat_fraction) + "," + std::to_string(rec.instance_count) + "\n";
    }
    return out;
}

ComplexityCurve curve_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    ComplexityCurve curve;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line_no == 1) {
            if (line != kCurveHeader)
                throw ParseError("unexpected curve CSV header '" + line + "'", line_no);
            continue;
        }
        auto fields = split_csv_row(line);
        if (fields.size() != 7)
            throw ParseError("expected 7 fields, got " + std::to_string(fields.size()), line_no);
        CurveRecord rec;
        rec.f = parse_field(fields[0], line_no);
        rec.m = static_cast<int>(parse_field(fields[1], line_no));
        rec.mean_q_max = parse_field(fields[2], line_no);
        rec.stderr_q_max = parse_field(fields[3], line_no);
        rec.median_dpll_decisions = parse_field(fields[4], line_no);
        rec.sat_fraction = parse_field(fields[5], line_no);
        rec.instance_count = static_cast<int>(parse_field(fields[6], line_no));
        curve.records.push_back(rec);
    }
    if (line_no == 0) throw ParseError("empty curve CSV", 1);
    return curve;
}

std::string baseline_to_csv(const std::vector<BaselineRecord>& records) {
    std::string out = "n,f,m,median_dpll,sat_fraction,count\n";
    for (const BaselineRecord& rec : records) {
        out += std::to_string(rec.n) + "," + fmt_double(rec.f) + "," + std::to_string(rec.m) + "," +
               fmt_double(rec.median_dpll_decisions) + "," + fmt_double(rec.sat_fraction) + "," +
               std::to_string(rec.instance_count) + "\n";
    }
    return out;
}

namespace {

struct Axis {
    double lo, hi;       // data range
    double x0, x1;       // pixel range
    double map(double v) const { return x0 + (v - lo) / (hi - lo) * (x1 - x0); }
};

void svg_axes(std::string& svg, const Axis& x, const Axis& y, const std::string& x_label,
              const std::string& y_label, int ticks) {
    svg += "<line x1='" + fmt_double(x.x0) + "' y1='" + fmt_double(y.x1) + "' x2='" +
           fmt_double(x.x1) + "' y2='" + fmt_double(y.x1) + "' stroke='black'/>\n";
    svg += "<line x1='" + fmt_double(x.x0) + "' y1='" + fmt_double(y.x0) + "' x2='" +
           fmt_double(x.x0) + "' y2='" + fmt_double(y.x1) + "' stroke='black'/>\n";
    for (int t = 0; t <= ticks; ++t) {
        const double fx = x.lo + (x.hi - x.lo) * t / ticks;
        const double px = x.map(fx);
        svg += "<line x1='" + fmt_double(px) + "' y1='" + fmt_double(y.x1) + "' x2='" +
               fmt_double(px) + "' y2='" + fmt_double(y.x1 + 4) + "' stroke='black'/>\n";
        svg += "<text x='" + fmt_double(px) + "' y='" + fmt_double(y.x1 + 16) +
               "' font-size='10' text-anchor='middle'>" + fmt_double(std::round(fx * 100) / 100) +
               "</text>\n";
        const double fy = y.lo + (y.hi - y.lo) * t / ticks;
        const double py = y.map(fy);
        svg += "<line x1='" + fmt_double(x.x0 - 4) + "' y1='" + fmt_double(py) + "' x2='" +
               fmt_double(x.x0) + "' y2='" + fmt_double(py) + "' stroke='black'/>\n";
        svg += "<text x='" + fmt_double(x.x0 - 6) + "' y='" + fmt_double(py + 3) +
               "' font-size='10' text-anchor='end'>" + fmt_double(std::round(fy * 1000) / 1000) +
               "</text>\n";
    }
    svg += "<text x='" + fmt_double(0.5 * (x.x0 + x.x1)) + "' y='" + fmt_double(y.x1 + 32) +
           "' font-size='12' text-anchor='middle'>" + x_label + "</text>\n";
    svg += "<text x='" + fmt_double(x.x0 - 40) + "' y='" + fmt_double(0.5 * (y.x0 + y.x1)) +
           "' font-size='12' text-anchor='middle' transform='rotate(-90 " + fmt_double(x.x0 - 40) +
           " " + fmt_double(0.5 * (y.x0 + y.x1)) + ")'>" + y_label + "</text>\n";
}

} // namespace

std::string curve_to_svg(const ComplexityCurve& curve, bool dpll_panel) {
    if (curve.records.empty()) throw InvalidParameterError("curve_to_svg: empty curve");

    const int width = 720;
    const int panel_height = 360;
    const int height = dpll_panel ? 2 * panel_height : panel_height;

    double f_lo = curve.records.front().f, f_hi = curve.records.back().f;
    if (f_hi <= f_lo) {
        f_lo -= 0.5;
        f_hi += 0.5;
    }
    double q_hi = 0.0, dpll_hi = 1.0;
    for (const CurveRecord& rec : curve.records) {
        q_hi = std::max(q_hi, rec.mean_q_max + rec.stderr_q_max);
        dpll_hi = std::max(dpll_hi, rec.median_dpll_decisions);
    }
    if (q_hi <= 0.0) q_hi = 1.0;
    q_hi *= 1.08;
    dpll_hi *= 1.08;

    std::string svg = "<svg xmlns='http://www.w3.org/2000/svg' width='" + std::to_string(width) +
                      "' height='" + std::to_string(height) + "'>\n";
    svg += "<rect width='100%' height='100%' fill='white'/>\n";

    Axis x{f_lo, f_hi, 64, width - 24.0};
    Axis y{q_hi, 0.0, 40, panel_height - 48.0}; // inverted: pixels grow downward
    svg_axes(svg, x, y, "clause-to-variable ratio f", "mean max Brody q", 8);

    std::string path;
    for (std::size_t i = 0; i < curve.records.size(); ++i) {
        const CurveRecord& rec = curve.records[i];
        path += (i == 0 ? "M" : " L") + fmt_double(x.map(rec.f)) + " " + fmt_double(y.map(rec.mean_q_max));
    }
    svg += "<path d='" + path + "' fill='none' stroke='#1f77b4' stroke-width='1.5'/>\n";
    for (const CurveRecord& rec : curve.records) {
        const double px = x.map(rec.f);
        if (rec.stderr_q_max > 0.0) {
            const double y_top = y.map(rec.mean_q_max + rec.stderr_q_max);
            const double y_bot = y.map(rec.mean_q_max - rec.stderr_q_max);
            svg += "<line x1='" + fmt_double(px) + "' y1='" + fmt_double(y_top) + "' x2='" +
                   fmt_double(px) + "' y2='" + fmt_double(y_bot) + "' stroke='#1f77b4'/>\n";
        }
        // one circle marker per data point
        svg += "<circle cx='" + fmt_double(px) + "' cy='" + fmt_double(y.map(rec.mean_q_max)) +
               "' r='3' fill='#1f77b4'/>\n";
    }

    if (dpll_panel) {
        Axis y2{dpll_hi, 0.0, panel_height + 40.0, 2.0 * panel_height - 48.0};
        svg_axes(svg, x, y2, "clause-to-variable ratio f", "median DPLL decisions", 8);
        std::string path2;
        for (std::size_t i = 0; i < curve.records.size(); ++i) {
            const CurveRecord& rec = curve.records[i];
            path2 += (i == 0 ? "M" : " L") + fmt_double(x.map(rec.f)) + " " +
                     fmt_double(y2.map(rec.median_dpll_decisions));
        }
        svg += "<path d='" + path2 + "' fill='none' stroke='#d62728' stroke-width='1.5'/>\n";
        for (const CurveRecord& rec : curve.records) {
            svg += "<rect x='" + fmt_double(x.map(rec.f) - 2.5) + "' y='" +
                   fmt_double(y2.map(rec.median_dpll_decisions) - 2.5) +
                   "' width='5' height='5' fill='#d62728'/>\n";
        }
    }

    svg += "</svg>\n";
    return svg;
}

std::string histogram_csv(const SpacingSample& sample, const BrodyFit& fit, int num_bins) {
    if (sample.spacings.empty()) throw InsufficientDataError("histogram_csv: empty sample");
    if (num_bins < 1) throw InvalidParameterError("histogram_csv: need at least one bin");
    const double hi = *std::max_element(sample.spacings.begin(), sample.spacings.end());
    const double top = hi > 0.0 ? hi : 1.0;
    std::vector<int> counts(num_bins, 0);
    for (double d : sample.spacings) {
        int bin = static_cast<int>(d / top * num_bins);
        if (bin >= num_bins) bin = num_bins - 1;
        ++counts[bin];
    }
    std::string out = "bin_left,bin_right,count,brody_density_at_fit\n";
    for (int b = 0; b < num_bins; ++b) {
        const double left = top * b / num_bins;
        const double right = top * (b + 1) / num_bins;
        out += fmt_double(left) + "," + fmt_double(right) + "," + std::to_string(counts[b]) + "," +
               fmt_double(brody_pdf(fit.q, 0.5 * (left + right))) + "\n";
    }
    return out;
}

void write_text_file(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw IoError("write failed for '" + path + "'");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace satspec
