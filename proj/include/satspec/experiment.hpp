#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "satspec/brody.hpp"
#include "satspec/solver.hpp"
#include "satspec/spectral.hpp"
#include "satspec/unfold.hpp"

namespace satspec {

struct ExperimentConfig {
    int n = 8;
    std::vector<double> f_grid; // defaults to {0.25, 0.5, ..., 8.0}
    int instances_per_f = 200;
    int interpolation_points = 100;
    std::uint64_t seed = 42;
    UnfoldingParams unfolding;
    FitParams fit;
    /// When true, fits whose degenerate_fraction exceeds
    /// degenerate_threshold are excluded from the per-instance maximum.
    bool exclude_degenerate_fits = false;
    double degenerate_threshold = 0.5;
    int jobs = 0; // 0 = hardware concurrency

    static std::vector<double> default_f_grid(); // 0.25 .. 8.0 step 0.25

    /// 20 instances per f, 25 interpolation points; same grids otherwise.
    static ExperimentConfig quick();
    static ExperimentConfig full();

    /// Clause count for a ratio: m = round(f * n). Configs where this drops
    /// below 1 are rejected. The realized ratio m/n is what gets reported
    /// downstream.
    int clauses_for(double f) const;

    nlohmann::json to_json() const;
    static ExperimentConfig from_json(const nlohmann::json& j);
    std::uint64_t hash() const;
};

/// Everything needed to re-run one instance in isolation, plus its results.
struct InstanceRecord {
    int f_index = 0;
    int instance_index = 0;
    int n = 0;
    int m = 0;
    double f = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t config_hash = 0;

    double q_max = 0.0;
    double s_at_max = 0.0;
    bool has_valid_fit = false;
    std::vector<PointFit> q_of_s;

    bool satisfiable = false;
    std::uint64_t dpll_decisions = 0;
    std::uint64_t dpll_propagations = 0;

    /// Non-empty when the instance failed outright (generation or solving);
    /// such records carry no results but keep the seed so the failure is
    /// reproducible.
    std::string error;
    /// Non-empty when only the spectral pipeline failed (e.g. dimension too
    /// small to unfold); classical results are still valid and q_max is
    /// flagged via has_valid_fit = false.
    std::string spectral_error;
};

struct CurveRecord {
    double f = 0.0; // realized m/n
    int m = 0;
    double mean_q_max = 0.0;
    double stderr_q_max = 0.0;
    double median_dpll_decisions = 0.0;
    double sat_fraction = 0.0;
    int instance_count = 0;
};

struct ComplexityCurve {
    std::vector<CurveRecord> records; // ordered by f
};

/// generate -> build -> sweep -> max_brody plus dpll_solve for one instance.
/// Deterministic for fixed (n, m, seed, config). Failures are captured in
/// the record, not thrown.
InstanceRecord run_instance(int n, int m, std::uint64_t seed, const ExperimentConfig& config);

struct ExperimentResult {
    ComplexityCurve curve;
    std::vector<InstanceRecord> instances; // (f_index, instance_index) order
};

/// Runs the full ensemble over config.f_grid with a worker pool. Instance
/// seeds derive as derive_seed(config.seed, f_index, instance_index), so the
/// output is a pure function of the config under any worker count. Throws
/// NumericFailureError if every instance at some f failed.
ExperimentResult run_experiment(const ExperimentConfig& config);

struct BaselineRecord {
    int n = 0;
    double f = 0.0; // realized m/n
    int m = 0;
    double median_dpll_decisions = 0.0;
    double sat_fraction = 0.0;
    int instance_count = 0;
};

/// Classical phase-transition baseline: DPLL cost and SAT fraction per
/// (n, f), medians over `instances` seeded instances. n must not exceed 24.
std::vector<BaselineRecord> run_classical_baseline(const std::vector<int>& n_list,
                                                   const std::vector<double>& f_grid,
                                                   int instances, std::uint64_t seed,
                                                   int jobs = 0);

nlohmann::json instance_to_json(const InstanceRecord& record);
void write_instances_jsonl(const std::vector<InstanceRecord>& records, const std::string& path);

} // namespace satspec
