#include <doctest.h>

#include <cmath>

#include "satspec/ensembles.hpp"
#include "satspec/errors.hpp"
#include "satspec/rng.hpp"
#include "satspec/spectral.hpp"
#include "satspec/util.hpp"

using namespace satspec;

TEST_CASE("GOE entry moments: mean zero, diagonal variance double") {
    const double omega = 1.3;
    auto rng = make_rng(1);
    std::vector<double> off, diag;
    for (int draw = 0; draw < 130; ++draw) {
        Eigen::MatrixXd h = sample_goe(40, omega, rng);
        for (int i = 0; i < 40; ++i) {
            diag.push_back(h(i, i));
            for (int j = i + 1; j < 40; ++j) off.push_back(h(i, j));
        }
    }
    const double n_off = static_cast<double>(off.size());
    REQUIRE(off.size() > 100000);

    double off_mean = mean(off), off_var = 0.0;
    for (double v : off) off_var += (v - off_mean) * (v - off_mean);
    off_var /= n_off - 1;
    const double off_expected = omega * omega / 2.0;
    CHECK(std::abs(off_mean) < 3.0 * std::sqrt(off_expected / n_off));
    CHECK(std::abs(off_var - off_expected) < 3.0 * off_expected * std::sqrt(2.0 / n_off));

    double diag_mean = mean(diag), diag_var = 0.0;
    for (double v : diag) diag_var += (v - diag_mean) * (v - diag_mean);
    diag_var /= diag.size() - 1;
    const double diag_expected = omega * omega;
    CHECK(std::abs(diag_mean) < 3.0 * std::sqrt(diag_expected / diag.size()));
    CHECK(std::abs(diag_var - diag_expected) <
          3.0 * diag_expected * std::sqrt(2.0 / diag.size()));
}

TEST_CASE("GUE entry moments") {
    const double omega = 1.0;
    auto rng = make_rng(2);
    std::vector<double> off_sq, diag;
    for (int draw = 0; draw < 100; ++draw) {
        Eigen::MatrixXcd h = sample_gue(32, omega, rng);
        CHECK((h - h.adjoint()).norm() == 0.0);
        for (int i = 0; i < 32; ++i) {
            diag.push_back(h(i, i).real());
            CHECK(h(i, i).imag() == 0.0);
            for (int j = i + 1; j < 32; ++j) off_sq.push_back(std::norm(h(i, j)));
        }
    }
    // E|H_ij|^2 = omega^2/2 off-diagonal; |H|^2 of a complex Gaussian has
    // variance equal to the square of its mean.
    const double expected = omega * omega / 2.0;
    const double measured = mean(off_sq);
    CHECK(std::abs(measured - expected) < 3.0 * expected / std::sqrt(off_sq.size()));

    double diag_var = 0.0;
    for (double v : diag) diag_var += v * v;
    diag_var /= diag.size();
    CHECK(std::abs(diag_var - expected) < 3.0 * expected * std::sqrt(2.0 / diag.size()));
}

TEST_CASE("GOE spectra are symmetric about zero") {
    std::vector<double> per_draw_means;
    for (int k = 0; k < 30; ++k) {
        auto rng = make_rng(derive_seed(7, k));
        per_draw_means.push_back(mean(eigenvalues_symmetric(sample_goe(64, 1.0, rng))));
    }
    CHECK(std::abs(mean(per_draw_means)) < 3.0 * stderr_of_mean(per_draw_means));
}

TEST_CASE("GP family covariance follows cos(dx)") {
    const int families = 4000, dim = 8;
    std::vector<double> same_point, apart;
    for (int k = 0; k < families; ++k) {
        RmtEnsembleConfig config{1, dim, 1.0, 1, derive_seed(11, k)};
        GpFamily family = sample_gp_family(config, {0.0, M_PI / 3.0});
        same_point.push_back(family.matrices[0](0, 1) * family.matrices[0](0, 1));
        apart.push_back(family.matrices[0](0, 1) * family.matrices[1](0, 1));
    }
    // f(0) = 1: the single-point second moment is omega^2/2
    CHECK(std::abs(mean(same_point) - 0.5) < 3.0 * stderr_of_mean(same_point));
    // cos(pi/3) = 1/2 of that
    CHECK(std::abs(mean(apart) - 0.25) < 3.0 * stderr_of_mean(apart));
    CHECK(GpFamily::correlation(0.0) == 1.0);
}

TEST_CASE("GP family is 2pi periodic") {
    RmtEnsembleConfig config{1, 16, 1.0, 1, 77};
    GpFamily at_x = sample_gp_family(config, {0.3});
    GpFamily shifted = sample_gp_family(config, {0.3 + 2.0 * M_PI});
    CHECK((at_x.matrices[0] - shifted.matrices[0]).norm() < 1e-9);
}

TEST_CASE("GP grid validation") {
    RmtEnsembleConfig config{1, 8, 1.0, 1, 0};
    CHECK_THROWS_AS(sample_gp_family(config, {}), InvalidParameterError);
    CHECK_THROWS_AS(sample_gp_family(config, {0.0, 0.0}), InvalidParameterError);
    CHECK_THROWS_AS(sample_gp_family(config, {0.0, 7.0}), InvalidParameterError);
    RmtEnsembleConfig gue_config{2, 8, 1.0, 1, 0};
    CHECK_THROWS_AS(sample_gp_family(gue_config, {0.0}), InvalidParameterError);
    CHECK_NOTHROW(sample_gp_family_hermitian(gue_config, {0.0, 1.0}));
}

TEST_CASE("velocity scale of a frozen family is zero") {
    LevelFlow flow;
    flow.x_grid = {0.0, 0.1, 0.2};
    flow.levels = {{1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}};
    CHECK(velocity_scale(flow) == 0.0);

    LevelFlow single;
    single.x_grid = {0.0};
    single.levels = {{1.0}};
    CHECK_THROWS_AS(velocity_scale(single), InsufficientDataError);
}

TEST_CASE("velocity rescaling is idempotent") {
    std::vector<double> grid(9);
    for (std::size_t k = 0; k < grid.size(); ++k) grid[k] = 0.05 * static_cast<double>(k);
    RmtEnsembleConfig config{1, 64, 1.0, 1, 5};
    LevelFlow flow = unfolded_flow(sample_gp_family(config, grid));
    const double scale = velocity_scale(flow);
    CHECK(scale > 0.0);
    const double rescaled = velocity_scale(rescale_flow(flow, scale));
    CHECK(std::abs(rescaled - 1.0) < 1e-6);

    // a second application leaves the scale at one
    const double again = velocity_scale(rescale_flow(rescale_flow(flow, scale), 1.0));
    CHECK(std::abs(again - 1.0) < 1e-6);
}

TEST_CASE("rescaled velocity is omega independent") {
    std::vector<double> grid(9);
    for (std::size_t k = 0; k < grid.size(); ++k) grid[k] = 0.05 * static_cast<double>(k);
    for (double omega : {0.5, 4.0}) {
        RmtEnsembleConfig config{1, 64, omega, 1, 91};
        LevelFlow flow = unfolded_flow(sample_gp_family(config, grid));
        const double rescaled = velocity_scale(rescale_flow(flow, velocity_scale(flow)));
        CHECK(std::abs(rescaled - 1.0) < 1e-6);
    }
}

TEST_CASE("velocity rescaling applies to interpolation sweeps too") {
    AqcSystem system = build_system(generate_instance(6, 12, 3));
    SweepResult swept = sweep(system, 6);
    LevelFlow flow = unfolded_flow(swept);
    const double scale = velocity_scale(flow);
    CHECK(scale > 0.0);
    CHECK(std::abs(velocity_scale(rescale_flow(flow, scale)) - 1.0) < 1e-6);
}

TEST_CASE("GOE and Poisson pipeline calibration") {
    BrodyFit goe = goe_pipeline_check(128, 20, 8);
    CHECK(goe.valid);
    CHECK(goe.q > 0.8);
    CHECK(goe.q < 1.1);

    BrodyFit poisson = poisson_pipeline_check(256, 20, 9);
    CHECK(poisson.valid);
    CHECK(poisson.q < 0.12);

    CHECK_THROWS_AS(goe_pipeline_check(32, 1, 0), InvalidParameterError);
}

TEST_CASE("gp validation report schema") {
    nlohmann::json report = gp_validation_report(64, 5, 123);
    CHECK(report.contains("goe_q"));
    CHECK(report.contains("poisson_q"));
    CHECK(report.contains("covariance_checks"));
    CHECK(report.contains("rescale_idempotence"));
    CHECK(report["goe_q"].get<double>() > 0.6);
    CHECK(report["poisson_q"].get<double>() < 0.25);
    for (const auto& check : report["covariance_checks"])
        CHECK(check["within_3_sigma"].get<bool>());
    CHECK(std::abs(report["rescale_idempotence"].get<double>() - 1.0) < 1e-6);
}
