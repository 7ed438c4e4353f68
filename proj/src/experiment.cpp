#include "satspec/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "satspec/aqc.hpp"
#include "satspec/cnf.hpp"
#include "satspec/errors.hpp"
#include "satspec/rng.hpp"
#include "satspec/util.hpp"

namespace satspec {

std::vector<double> ExperimentConfig::default_f_grid() {
    std::vector<double> grid;
    for (int k = 1; k <= 32; ++k) grid.push_back(0.25 * k);
    return grid;
}

ExperimentConfig ExperimentConfig::full() {
    ExperimentConfig config;
    config.f_grid = default_f_grid();
    return config;
}

ExperimentConfig ExperimentConfig::quick() {
    ExperimentConfig config = full();
    config.instances_per_f = 20;
    config.interpolation_points = 25;
    return config;
}

int ExperimentConfig::clauses_for(double f) const {
    return static_cast<int>(std::llround(f * n));
}

nlohmann::json ExperimentConfig::to_json() const {
    return nlohmann::json{{"n", n},
                          {"f_grid", f_grid},
                          {"instances_per_f", instances_per_f},
                          {"interpolation_points", interpolation_points},
                          {"seed", seed},
                          {"unfold_degree", unfolding.poly_degree},
                          {"edge_trim_fraction", unfolding.edge_trim_fraction},
                          {"min_sample", fit.min_sample},
                          {"q_upper", fit.q_upper},
                          {"exclude_degenerate_fits", exclude_degenerate_fits},
                          {"degenerate_threshold", degenerate_threshold},
                          {"jobs", jobs}};
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
    ExperimentConfig config = full();
    if (j.contains("n")) config.n = j.at("n").get<int>();
    if (j.contains("f_grid")) config.f_grid = j.at("f_grid").get<std::vector<double>>();
    if (j.contains("instances_per_f")) config.instances_per_f = j.at("instances_per_f").get<int>();
    if (j.contains("interpolation_points"))
        config.interpolation_points = j.at("interpolation_points").get<int>();
    if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("unfold_degree")) config.unfolding.poly_degree = j.at("unfold_degree").get<int>();
    if (j.contains("edge_trim_fraction"))
        config.unfolding.edge_trim_fraction = j.at("edge_trim_fraction").get<double>();
    if (j.contains("min_sample")) config.fit.min_sample = j.at("min_sample").get<std::size_t>();
    if (j.contains("q_upper")) config.fit.q_upper = j.at("q_upper").get<double>();
    if (j.contains("exclude_degenerate_fits"))
        config.exclude_degenerate_fits = j.at("exclude_degenerate_fits").get<bool>();
    if (j.contains("degenerate_threshold"))
        config.degenerate_threshold = j.at("degenerate_threshold").get<double>();
    if (j.contains("jobs")) config.jobs = j.at("jobs").get<int>();
    return config;
}

std::uint64_t ExperimentConfig::hash() const {
    // jobs does not affect results, so it must not affect the hash either
    nlohmann::json j = to_json();
    j.erase("jobs");
    return fnv1a64(j.dump());
}

namespace {

void validate_config(const ExperimentConfig& config) {
    if (config.n < 3) throw InvalidParameterError("config: n must be >= 3");
    if (config.f_grid.empty()) throw InvalidParameterError("config: empty f grid");
    if (!std::is_sorted(config.f_grid.begin(), config.f_grid.end()))
        throw InvalidParameterError("config: f grid must be ascending");
    if (config.instances_per_f < 1)
        throw InvalidParameterError("config: instances_per_f must be >= 1");
    if (config.interpolation_points < 2)
        throw InvalidParameterError("config: interpolation_points must be >= 2");
    for (double f : config.f_grid)
        if (config.clauses_for(f) < 1)
            throw InvalidParameterError("config: f grid entry yields no clauses");
}

} // namespace

InstanceRecord run_instance(int n, int m, std::uint64_t seed, const ExperimentConfig& config) {
    InstanceRecord record;
    record.n = n;
    record.m = m;
    record.f = static_cast<double>(m) / n;
    record.seed = seed;
    record.config_hash = config.hash();
    try {
        CnfFormula formula = generate_instance(n, m, seed);
        SatResult sat = dpll_solve(formula);
        record.satisfiable = sat.satisfiable;
        record.dpll_decisions = sat.dpll_decisions;
        record.dpll_propagations = sat.dpll_propagations;

        try {
            AqcSystem system = build_system(formula);
            SweepResult swept = sweep(system, config.interpolation_points, seed);
            const double exclude_above = config.exclude_degenerate_fits
                                             ? config.degenerate_threshold
                                             : std::numeric_limits<double>::infinity();
            MaxBrodyResult fits = max_brody(swept, config.unfolding, config.fit, exclude_above);
            record.q_max = fits.q_max;
            record.s_at_max = fits.s_at_max;
            record.has_valid_fit = fits.has_valid;
            record.q_of_s = std::move(fits.fits);
        } catch (const Error& e) {
            record.spectral_error = e.what();
        }
    } catch (const Error& e) {
        record.error = e.what();
    }
    return record;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    validate_config(config);
    const std::size_t per_f = static_cast<std::size_t>(config.instances_per_f);
    const std::size_t total = config.f_grid.size() * per_f;

    ExperimentResult result;
    result.instances.resize(total);
    parallel_for(total, config.jobs, [&](std::size_t task) {
        const std::size_t f_index = task / per_f;
        const std::size_t instance_index = task % per_f;
        const int m = config.clauses_for(config.f_grid[f_index]);
        const std::uint64_t seed = derive_seed(config.seed, f_index, instance_index);
        InstanceRecord record = run_instance(config.n, m, seed, config);
        record.f_index = static_cast<int>(f_index);
        record.instance_index = static_cast<int>(instance_index);
        result.instances[task] = std::move(record);
    });

    for (std::size_t f_index = 0; f_index < config.f_grid.size(); ++f_index) {
        std::vector<double> q_values;
        std::vector<double> decision_counts;
        int sat_count = 0, usable = 0;
        for (std::size_t i = 0; i < per_f; ++i) {
            const InstanceRecord& record = result.instances[f_index * per_f + i];
            if (!record.error.empty()) continue;
            ++usable;
            decision_counts.push_back(static_cast<double>(record.dpll_decisions));
            sat_count += record.satisfiable ? 1 : 0;
            if (record.has_valid_fit) q_values.push_back(record.q_max);
        }
        if (usable == 0)
            throw NumericFailureError("run_experiment: every instance failed at f = " +
                                      fmt_double(config.f_grid[f_index]));
        CurveRecord rec;
        rec.m = config.clauses_for(config.f_grid[f_index]);
        rec.f = static_cast<double>(rec.m) / config.n;
        rec.mean_q_max = mean(q_values);
        rec.stderr_q_max = stderr_of_mean(q_values);
        rec.median_dpll_decisions = median(decision_counts);
        rec.sat_fraction = static_cast<double>(sat_count) / usable;
        rec.instance_count = usable;
        result.curve.records.push_back(rec);
    }
    return result;
}

std::vector<BaselineRecord> run_classical_baseline(const std::vector<int>& n_list,
                                                   const std::vector<double>& f_grid, int instances,
                                                   std::uint64_t seed, int jobs) {
    if (n_list.empty() || f_grid.empty())
        throw InvalidParameterError("baseline: empty n list or f grid");
    for (int n : n_list)
        if (n < 3 || n > 24)
            throw InvalidParameterError("baseline: n must lie in [3, 24] for tractable DPLL");
    if (instances < 1) throw InvalidParameterError("baseline: instances must be >= 1");
    for (int n : n_list)
        for (double f : f_grid) {
            const long long m = std::llround(f * n);
            const long long bound = 8LL * n * (n - 1) * (n - 2) / 6;
            if (m < 1 || m > bound)
                throw InvalidParameterError("baseline: f = " + fmt_double(f) + " at n = " +
                                            std::to_string(n) + " yields an invalid clause count");
        }

    struct Cell {
        std::vector<double> decisions;
        int sat = 0;
    };
    const std::size_t cells = n_list.size() * f_grid.size();
    std::vector<Cell> grid(cells);
    std::vector<std::vector<SatResult>> raw(cells);
    for (auto& column : raw) column.resize(instances);

    const std::size_t total = cells * static_cast<std::size_t>(instances);
    parallel_for(total, jobs, [&](std::size_t task) {
        const std::size_t cell = task / instances;
        const std::size_t inst = task % instances;
        const std::size_t n_index = cell / f_grid.size();
        const std::size_t f_index = cell % f_grid.size();
        const int n = n_list[n_index];
        const int m = static_cast<int>(std::llround(f_grid[f_index] * n));
        const std::uint64_t child = derive_seed(derive_seed(seed, n_index), f_index, inst);
        raw[cell][inst] = dpll_solve(generate_instance(n, m, child));
    });

    std::vector<BaselineRecord> records;
    for (std::size_t cell = 0; cell < cells; ++cell) {
        const std::size_t n_index = cell / f_grid.size();
        const std::size_t f_index = cell % f_grid.size();
        BaselineRecord rec;
        rec.n = n_list[n_index];
        rec.m = static_cast<int>(std::llround(f_grid[f_index] * rec.n));
        rec.f = static_cast<double>(rec.m) / rec.n;
        std::vector<double> decisions;
        int sat = 0;
        for (const SatResult& r : raw[cell]) {
            decisions.push_back(static_cast<double>(r.dpll_decisions));
            sat += r.satisfiable ? 1 : 0;
        }
        rec.median_dpll_decisions = median(decisions);
        rec.sat_fraction = static_cast<double>(sat) / instances;
        rec.instance_count = instances;
        records.push_back(rec);
    }
    return records;
}

nlohmann::json instance_to_json(const InstanceRecord& record) {
    nlohmann::json j{{"f_index", record.f_index},
                     {"instance_index", record.instance_index},
                     {"n", record.n},
                     {"m", record.m},
                     {"f", record.f},
                     {"seed", record.seed},
                     {"config_hash", record.config_hash},
                     {"q_max", record.q_max},
                     {"s_at_max", record.s_at_max},
                     {"has_valid_fit", record.has_valid_fit},
                     {"satisfiable", record.satisfiable},
                     {"dpll_decisions", record.dpll_decisions},
                     {"dpll_propagations", record.dpll_propagations},
                     {"error", record.error},
                     {"spectral_error", record.spectral_error}};
    std::vector<double> s, q, degenerate;
    std::vector<bool> valid;
    for (const PointFit& point : record.q_of_s) {
        s.push_back(point.s);
        q.push_back(point.fit.q);
        valid.push_back(point.fit.valid);
        degenerate.push_back(point.degenerate_fraction);
    }
    j["q_of_s"] = {{"s", s}, {"q", q}, {"valid", valid}, {"degenerate_fraction", degenerate}};
    return j;
}

void write_instances_jsonl(const std::vector<InstanceRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    for (const InstanceRecord& record : records) out << instance_to_json(record).dump() << '\n';
    if (!out) throw IoError("write failed for '" + path + "'");
}

} // namespace satspec
