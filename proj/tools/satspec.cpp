// Command-line front end: instance generation, DPLL solving, spectra,
// Brody fits, the classical baseline, RMT/GP calibration, and the full
// complexity-curve experiment.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "satspec/aqc.hpp"
#include "satspec/brody.hpp"
#include "satspec/cnf.hpp"
#include "satspec/ensembles.hpp"
#include "satspec/errors.hpp"
#include "satspec/experiment.hpp"
#include "satspec/plot.hpp"
#include "satspec/solver.hpp"
#include "satspec/spectral.hpp"
#include "satspec/util.hpp"

namespace {

constexpr int kExitInvalidConfig = 2;
constexpr int kExitNumericFailure = 3;
constexpr int kExitIo = 4;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        satspec::write_text_file(text, out_path);
}

int cmd_gen(int vars, int clauses, std::uint64_t seed, const std::string& out) {
    satspec::CnfFormula formula = satspec::generate_instance(vars, clauses, seed);
    emit(satspec::emit_dimacs(formula), out);
    return 0;
}

int cmd_solve(const std::string& path, bool as_json) {
    satspec::CnfFormula formula = satspec::read_dimacs_file(path);
    satspec::SatResult result = satspec::dpll_solve(formula);
    if (as_json) {
        nlohmann::json j{{"satisfiable", result.satisfiable},
                         {"dpll_decisions", result.dpll_decisions},
                         {"dpll_propagations", result.dpll_propagations}};
        std::cout << j.dump() << '\n';
    } else {
        std::cout << (result.satisfiable ? "SATISFIABLE" : "UNSATISFIABLE") << " decisions="
                  << result.dpll_decisions << " propagations=" << result.dpll_propagations << '\n';
    }
    return 0;
}

int cmd_spectrum(const std::string& path, double s, const std::string& out) {
    satspec::CnfFormula formula = satspec::read_dimacs_file(path);
    satspec::AqcSystem system = satspec::build_system(formula);
    std::vector<double> ev = satspec::eigenvalues_symmetric(satspec::hamiltonian_at(system, s));
    nlohmann::json j{{"n", system.num_qubits}, {"m", system.num_clauses()}, {"s", s},
                     {"eigenvalues", ev}};
    emit(j.dump() + "\n", out);
    return 0;
}

int cmd_sweep(const std::string& path, int points, std::uint64_t seed, const std::string& out) {
    satspec::CnfFormula formula = satspec::read_dimacs_file(path);
    satspec::AqcSystem system = satspec::build_system(formula);
    satspec::SweepResult result = satspec::sweep(system, points, seed);
    emit(satspec::sweep_to_json(result).dump() + "\n", out);
    return 0;
}

int cmd_fit(const std::string& path, const satspec::UnfoldingParams& unfold_params,
            const satspec::FitParams& fit_params, const std::string& out,
            const std::string& hist_path, int hist_bins) {
    satspec::SweepResult swept = satspec::read_sweep_file(path);
    satspec::MaxBrodyResult result = satspec::max_brody(swept, unfold_params, fit_params);
    emit(satspec::fit_report_json(result).dump() + "\n", out);

    if (!hist_path.empty()) {
        // histogram at the grid point that carries the maximum
        std::size_t best = 0;
        for (std::size_t k = 0; k < swept.s_grid.size(); ++k)
            if (swept.s_grid[k] == result.s_at_max) best = k;
        satspec::UnfoldedSpectrum u = satspec::unfold(swept.spectra[best], unfold_params);
        satspec::SpacingSample sample{u.spacings, swept.s_grid[best], swept.seed};
        satspec::write_text_file(
            satspec::histogram_csv(sample, result.fits[best].fit, hist_bins), hist_path);
    }
    return 0;
}

int cmd_baseline(const std::vector<int>& n_list, double f_min, double f_max, double f_step,
                 int instances, std::uint64_t seed, int jobs, const std::string& out) {
    std::vector<double> f_grid;
    for (double f = f_min; f <= f_max + 1e-12; f += f_step) f_grid.push_back(f);
    auto records = satspec::run_classical_baseline(n_list, f_grid, instances, seed, jobs);
    emit(satspec::baseline_to_csv(records), out);
    return 0;
}

int cmd_gp_validate(int dim, int samples, std::uint64_t seed, const std::string& out) {
    emit(satspec::gp_validation_report(dim, samples, seed).dump(2) + "\n", out);
    return 0;
}

int cmd_plot(const std::string& csv_path, const std::string& out, bool dpll_panel) {
    satspec::ComplexityCurve curve = satspec::curve_from_csv(satspec::read_text_file(csv_path));
    satspec::write_text_file(satspec::curve_to_svg(curve, dpll_panel), out);
    return 0;
}

int cmd_reproduce(satspec::ExperimentConfig config, const std::string& out_dir) {
    std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw satspec::IoError("cannot create output directory '" + out_dir + "'");

    satspec::ExperimentResult result = satspec::run_experiment(config);
    satspec::write_text_file(satspec::curve_to_csv(result.curve), (dir / "curve.csv").string());
    satspec::write_text_file(satspec::curve_to_svg(result.curve, true),
                             (dir / "curve.svg").string());
    satspec::write_instances_jsonl(result.instances, (dir / "instances.jsonl").string());
    std::cerr << "wrote " << (dir / "curve.csv").string() << ", curve.svg, instances.jsonl\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral statistics of adiabatic 3-SAT Hamiltonians"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random 3-SAT instance (DIMACS)");
    int gen_vars = 8, gen_clauses = 16;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--vars", gen_vars, "number of variables")->required();
    gen->add_option("--clauses", gen_clauses, "number of clauses")->required();
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // solve
    auto* solve = app.add_subcommand("solve", "DPLL-solve a DIMACS file");
    std::string solve_path;
    bool solve_json = false;
    solve->add_option("file", solve_path, "DIMACS CNF file")->required();
    solve->add_flag("--json", solve_json, "emit JSON");

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of H(s) for one instance");
    std::string spec_path, spec_out;
    double spec_s = 0.5;
    spectrum->add_option("file", spec_path, "DIMACS CNF file")->required();
    spectrum->add_option("--s", spec_s, "interpolation coordinate in [0,1]");
    spectrum->add_option("--out", spec_out, "output path (default stdout)");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "spectra over the interpolation grid");
    std::string sweep_path, sweep_out;
    int sweep_points = 100;
    std::uint64_t sweep_seed = 0;
    sweep_cmd->add_option("file", sweep_path, "DIMACS CNF file")->required();
    sweep_cmd->add_option("--points", sweep_points, "grid points (endpoints included)");
    sweep_cmd->add_option("--seed", sweep_seed, "seed label carried into the metadata");
    sweep_cmd->add_option("--out", sweep_out, "output path (default stdout)");

    // fit
    auto* fit = app.add_subcommand("fit", "unfold + Brody fit of a sweep JSON");
    std::string fit_path, fit_out, fit_hist;
    satspec::UnfoldingParams unfold_params;
    satspec::FitParams fit_params;
    int hist_bins = 25;
    fit->add_option("file", fit_path, "sweep JSON file")->required();
    fit->add_option("--degree", unfold_params.poly_degree, "unfolding polynomial degree");
    fit->add_option("--trim", unfold_params.edge_trim_fraction, "edge trim fraction");
    fit->add_option("--min-sample", fit_params.min_sample, "spacings needed for a valid fit");
    fit->add_option("--out", fit_out, "output path (default stdout)");
    fit->add_option("--hist", fit_hist, "also write a spacing histogram CSV here");
    fit->add_option("--bins", hist_bins, "histogram bins");

    // baseline
    auto* baseline = app.add_subcommand("baseline", "classical DPLL cost / SAT fraction vs f");
    std::vector<int> base_n{20};
    double base_fmin = 1.0, base_fmax = 8.0, base_fstep = 0.25;
    int base_instances = 200, base_jobs = 0;
    std::uint64_t base_seed = 42;
    std::string base_out;
    baseline->add_option("--n", base_n, "variable counts (repeatable)");
    baseline->add_option("--f-min", base_fmin, "first clause-to-variable ratio");
    baseline->add_option("--f-max", base_fmax, "last clause-to-variable ratio");
    baseline->add_option("--f-step", base_fstep, "ratio step");
    baseline->add_option("--instances", base_instances, "instances per (n, f)");
    baseline->add_option("--seed", base_seed, "master seed");
    baseline->add_option("--jobs", base_jobs, "worker threads (0 = auto)");
    baseline->add_option("--out", base_out, "output CSV path (default stdout)");

    // gp-validate
    auto* gp = app.add_subcommand("gp-validate", "RMT/GP calibration report");
    int gp_dim = 256, gp_samples = 50;
    std::uint64_t gp_seed = 42;
    std::string gp_out;
    gp->add_option("--dim", gp_dim, "matrix dimension");
    gp->add_option("--samples", gp_samples, "ensemble size");
    gp->add_option("--seed", gp_seed, "master seed");
    gp->add_option("--out", gp_out, "output path (default stdout)");

    // plot
    auto* plot = app.add_subcommand("plot", "render a curve CSV as SVG");
    std::string plot_csv, plot_out = "curve.svg";
    bool plot_dpll = false;
    plot->add_option("file", plot_csv, "curve CSV file")->required();
    plot->add_option("--out", plot_out, "output SVG path");
    plot->add_flag("--dpll-panel", plot_dpll, "add the median DPLL cost panel");

    // reproduce-fig2
    auto* fig2 = app.add_subcommand(
        "reproduce-fig2", "run the full complexity-curve experiment and write CSV/SVG/JSONL");
    bool fig2_quick = false;
    std::string fig2_config, fig2_out = "fig2";
    int fig2_jobs = -1;
    std::uint64_t fig2_seed = 0;
    bool fig2_seed_set = false;
    fig2->add_flag("--quick", fig2_quick, "20 instances per f, 25 grid points");
    fig2->add_option("--config", fig2_config, "experiment config JSON");
    fig2->add_option("--out", fig2_out, "output directory");
    fig2->add_option("--jobs", fig2_jobs, "worker threads (0 = auto)");
    fig2->add_option("--seed", fig2_seed, "master seed")->each([&](const std::string&) {
        fig2_seed_set = true;
    });

    try {
        app.parse(argc, argv);

        if (gen->parsed()) return cmd_gen(gen_vars, gen_clauses, gen_seed, gen_out);
        if (solve->parsed()) return cmd_solve(solve_path, solve_json);
        if (spectrum->parsed()) return cmd_spectrum(spec_path, spec_s, spec_out);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_path, sweep_points, sweep_seed, sweep_out);
        if (fit->parsed())
            return cmd_fit(fit_path, unfold_params, fit_params, fit_out, fit_hist, hist_bins);
        if (baseline->parsed())
            return cmd_baseline(base_n, base_fmin, base_fmax, base_fstep, base_instances, base_seed,
                                base_jobs, base_out);
        if (gp->parsed()) return cmd_gp_validate(gp_dim, gp_samples, gp_seed, gp_out);
        if (plot->parsed()) return cmd_plot(plot_csv, plot_out, plot_dpll);
        if (fig2->parsed()) {
            satspec::ExperimentConfig config;
            if (!fig2_config.empty())
                config = satspec::ExperimentConfig::from_json(
                    nlohmann::json::parse(satspec::read_text_file(fig2_config)));
            else
                config = fig2_quick ? satspec::ExperimentConfig::quick()
                                    : satspec::ExperimentConfig::full();
            if (fig2_quick && !fig2_config.empty()) {
                config.instances_per_f = 20;
                config.interpolation_points = 25;
            }
            if (fig2_jobs >= 0) config.jobs = fig2_jobs;
            if (fig2_seed_set) config.seed = fig2_seed;
            return cmd_reproduce(config, fig2_out);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidConfig;
    } catch (const satspec::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const satspec::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidConfig;
    } catch (const satspec::InvalidParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidConfig;
    } catch (const satspec::ResourceBoundError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidConfig;
    } catch (const satspec::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumericFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumericFailure;
    }
}
