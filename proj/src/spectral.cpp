#include "satspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <Eigen/Eigenvalues>

#include "satspec/errors.hpp"
#include "satspec/util.hpp"

namespace satspec {

std::vector<double> eigenvalues_symmetric(const SymmetricMatrix& matrix) {
    if (matrix.rows() != matrix.cols() || matrix.rows() < 1)
        throw InvalidParameterError("eigenvalues_symmetric: matrix must be square, dim >= 1");
    if (!matrix.allFinite())
        throw InvalidParameterError("eigenvalues_symmetric: non-finite entries");

    Eigen::SelfAdjointEigenSolver<SymmetricMatrix> solver(matrix, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericFailureError("eigenvalues_symmetric: QL iteration failed to converge at dim " +
                                  std::to_string(matrix.rows()));

    const auto& ev = solver.eigenvalues();
    std::vector<double> values(ev.data(), ev.data() + ev.size());
    for (double v : values)
        if (!std::isfinite(v))
            throw NumericFailureError("eigenvalues_symmetric: non-finite eigenvalue");
    std::sort(values.begin(), values.end()); // Eigen returns ascending; keep the guarantee explicit
    return values;
}

SweepResult sweep(const AqcSystem& system, int num_points, std::uint64_t seed_label) {
    if (num_points < 2) throw InvalidParameterError("sweep: need at least 2 grid points");

    SweepResult result;
    result.n = system.num_qubits;
    result.m = system.num_clauses();
    result.f = system.clause_ratio();
    result.seed = seed_label;
    result.s_grid.reserve(num_points);
    result.spectra.reserve(num_points);

    for (int k = 0; k < num_points; ++k) {
        const double s = static_cast<double>(k) / (num_points - 1);
        result.s_grid.push_back(s);

        SymmetricMatrix h = hamiltonian_at(system, s);
        const double trace = h.trace();
        Spectrum spectrum;
        spectrum.s = s;
        spectrum.eigenvalues = eigenvalues_symmetric(h);

        double sum = 0.0, max_abs = 0.0;
        for (double ev : spectrum.eigenvalues) {
            sum += ev;
            max_abs = std::max(max_abs, std::abs(ev));
        }
        const double tol = 1e-9 * static_cast<double>(system.dim) * std::max(max_abs, 1.0);
        if (std::abs(sum - trace) > tol)
            throw NumericFailureError("sweep: eigenvalue sum violates the trace identity at s = " +
                                      fmt_double(s));
        result.spectra.push_back(std::move(spectrum));
    }
    return result;
}

nlohmann::json sweep_to_json(const SweepResult& result) {
    nlohmann::json j;
    j["n"] = result.n;
    j["m"] = result.m;
    j["f"] = result.f;
    j["seed"] = result.seed;
    j["s_grid"] = result.s_grid;
    auto spectra = nlohmann::json::array();
    for (const Spectrum& sp : result.spectra) spectra.push_back(sp.eigenvalues);
    j["spectra"] = std::move(spectra);
    return j;
}

SweepResult sweep_from_json(const nlohmann::json& j) {
    SweepResult result;
    result.n = j.at("n").get<int>();
    result.m = j.at("m").get<int>();
    result.f = j.at("f").get<double>();
    result.seed = j.at("seed").get<std::uint64_t>();
    result.s_grid = j.at("s_grid").get<std::vector<double>>();
    const auto& spectra = j.at("spectra");
    if (spectra.size() != result.s_grid.size())
        throw InvalidParameterError("sweep_from_json: spectra/s_grid length mismatch");
    for (std::size_t k = 0; k < spectra.size(); ++k) {
        Spectrum sp;
        sp.s = result.s_grid[k];
        sp.eigenvalues = spectra[k].get<std::vector<double>>();
        result.spectra.push_back(std::move(sp));
    }
    return result;
}

void write_sweep_file(const SweepResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << sweep_to_json(result).dump() << '\n';
    if (!out) throw IoError("write failed for '" + path + "'");
}

SweepResult read_sweep_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    nlohmann::json j;
    in >> j;
    return sweep_from_json(j);
}

} // namespace satspec
