#include <doctest.h>

#include <cmath>
#include <numeric>

#include "satspec/aqc.hpp"
#include "satspec/cnf.hpp"
#include "satspec/ensembles.hpp"
#include "satspec/errors.hpp"
#include "satspec/rng.hpp"
#include "satspec/spectral.hpp"
#include "satspec/unfold.hpp"

using namespace satspec;

TEST_CASE("equally spaced levels unfold to unit spacings") {
    std::vector<double> levels(100);
    std::iota(levels.begin(), levels.end(), 0.0);
    UnfoldedSpectrum u = unfold(levels);
    CHECK(u.edge_discard == 5);
    CHECK(u.levels.size() == 90);
    REQUIRE(u.spacings.size() == 89);
    for (double s : u.spacings) {
        CHECK(s > 0.99);
        CHECK(s < 1.01);
    }
    CHECK(u.degenerate_fraction == 0.0);
}

TEST_CASE("mean retained spacing is unit for generic spectra") {
    auto check_mean = [](const std::vector<double>& levels) {
        UnfoldedSpectrum u = unfold(levels);
        const double mean =
            std::accumulate(u.spacings.begin(), u.spacings.end(), 0.0) / u.spacings.size();
        CHECK(mean > 0.9);
        CHECK(mean < 1.1);
        CHECK(std::is_sorted(u.levels.begin(), u.levels.end()));
    };

    auto rng = make_rng(7);
    Eigen::MatrixXd goe = sample_goe(128, 1.0, rng);
    check_mean(eigenvalues_symmetric(goe));

    std::vector<double> poisson(200);
    double acc = 0.0;
    for (double& v : poisson) {
        acc += -std::log(1.0 - uniform01(rng));
        v = acc;
    }
    check_mean(poisson);
}

TEST_CASE("integer-valued problem spectra are degeneracy dominated") {
    AqcSystem system = build_system(generate_instance(8, 16, 99));
    SweepResult result = sweep(system, 2); // endpoints only
    UnfoldedSpectrum u = unfold(result.spectra.back()); // H(1): integer hp_diag values
    CHECK(u.degenerate_fraction > 0.5);
    for (double s : u.spacings) CHECK(s >= 1e-8);
    // unit mean holds even through heavy degeneracy
    const double mean =
        std::accumulate(u.spacings.begin(), u.spacings.end(), 0.0) / u.spacings.size();
    CHECK(mean > 0.9);
    CHECK(mean < 1.1);
}

TEST_CASE("data requirements") {
    std::vector<double> few(19, 0.0);
    std::iota(few.begin(), few.end(), 0.0);
    CHECK_THROWS_AS(unfold(few), InsufficientDataError);

    std::vector<double> flat(30, 1.0);
    CHECK_THROWS_AS(unfold(flat), DegenerateSpectrumError);

    std::vector<double> unsorted(30);
    std::iota(unsorted.begin(), unsorted.end(), 0.0);
    std::swap(unsorted[3], unsorted[4]);
    CHECK_THROWS_AS(unfold(unsorted), InvalidParameterError);

    std::vector<double> ok(20);
    std::iota(ok.begin(), ok.end(), 0.0);
    CHECK_NOTHROW(unfold(ok));
}

TEST_CASE("unfolding an already unfolded near-uniform spectrum is near-idempotent") {
    auto rng = make_rng(17);
    std::vector<double> levels(240);
    double acc = 0.0;
    for (double& v : levels) {
        acc += 0.9 + 0.2 * uniform01(rng); // near-uniform spacings
        v = acc;
    }
    UnfoldedSpectrum once = unfold(levels);
    UnfoldedSpectrum twice = unfold(once.levels);

    const int offset = twice.edge_discard;
    double diff_sq = 0.0, ref_sq = 0.0;
    for (std::size_t j = 0; j < twice.spacings.size(); ++j) {
        const double a = twice.spacings[j];
        const double b = once.spacings[j + offset];
        diff_sq += (a - b) * (a - b);
        ref_sq += b * b;
    }
    CHECK(std::sqrt(diff_sq / ref_sq) < 0.05);
}

TEST_CASE("unfolding parameters are validated") {
    std::vector<double> levels(50);
    std::iota(levels.begin(), levels.end(), 0.0);
    UnfoldingParams params;
    params.poly_degree = 0;
    CHECK_THROWS_AS(unfold(levels, params), InvalidParameterError);
    params.poly_degree = 6;
    params.edge_trim_fraction = 0.5;
    CHECK_THROWS_AS(unfold(levels, params), InvalidParameterError);
}
