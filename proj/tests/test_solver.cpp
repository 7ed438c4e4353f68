#include <doctest.h>

#include <vector>

#include "satspec/cnf.hpp"
#include "satspec/errors.hpp"
#include "satspec/rng.hpp"
#include "satspec/solver.hpp"
#include "satspec/util.hpp"

using namespace satspec;

namespace {

CnfFormula single_clause_formula() {
    CnfFormula formula;
    formula.num_vars = 3;
    formula.clauses.push_back(Clause{Literal{0, false}, Literal{1, false}, Literal{2, false}});
    return formula;
}

} // namespace

TEST_CASE("single positive clause solves in one node") {
    SatResult result = dpll_solve(single_clause_formula());
    CHECK(result.satisfiable);
    CHECK(result.dpll_decisions == 1);
    REQUIRE(result.model.has_value());
    CHECK(satisfies(single_clause_formula(), *result.model));
}

TEST_CASE("the full 8-clause n=3 formula is unsatisfiable") {
    CnfFormula formula = generate_instance(3, 8, 11);
    SatResult result = dpll_solve(formula);
    CHECK_FALSE(result.satisfiable);
    CHECK(result.dpll_decisions >= 1);
    BruteForceResult exact = brute_force(formula);
    CHECK_FALSE(exact.satisfiable);
    CHECK(exact.num_satisfying == 0);
}

TEST_CASE("brute force on trivial formulas") {
    CnfFormula empty;
    empty.num_vars = 6;
    BruteForceResult r = brute_force(empty);
    CHECK(r.satisfiable);
    CHECK(r.num_satisfying == 64); // vacuous satisfaction

    BruteForceResult single = brute_force(single_clause_formula());
    CHECK(single.satisfiable);
    CHECK(single.num_satisfying == 7); // only all-false violates
}

TEST_CASE("empty formula solves without decisions") {
    CnfFormula empty;
    empty.num_vars = 4;
    SatResult result = dpll_solve(empty);
    CHECK(result.satisfiable);
    CHECK(result.dpll_decisions == 0);
}

TEST_CASE("brute force enforces the enumeration bound") {
    CnfFormula formula = generate_instance(25, 4, 0);
    CHECK_THROWS_AS(brute_force(formula), ResourceBoundError);
}

TEST_CASE("dpll agrees with brute force across the ratio range") {
    // 100 instances at each of five ratios, n cycling through 6..12
    const double ratios[] = {0.5, 1.0, 2.0, 4.25, 6.0};
    std::uint64_t seed = 2024;
    for (double f : ratios) {
        for (int i = 0; i < 100; ++i) {
            const int n = 6 + i % 7;
            const int m = std::max(1, static_cast<int>(f * n + 0.5));
            CnfFormula formula = generate_instance(n, m, seed++);
            SatResult dpll = dpll_solve(formula);
            BruteForceResult exact = brute_force(formula);
            REQUIRE(dpll.satisfiable == exact.satisfiable);
            CHECK(dpll.dpll_decisions >= 1);
            if (dpll.satisfiable) {
                REQUIRE(dpll.model.has_value());
                CHECK(satisfies(formula, *dpll.model));
            }
        }
    }
}

TEST_CASE("decision counts peak near the hard ratio") {
    std::vector<double> easy, hard;
    for (int i = 0; i < 200; ++i) {
        easy.push_back(static_cast<double>(
            dpll_solve(generate_instance(12, 12, derive_seed(1, i))).dpll_decisions));
        hard.push_back(static_cast<double>(
            dpll_solve(generate_instance(12, 51, derive_seed(2, i))).dpll_decisions));
    }
    CHECK(median(hard) > median(easy));
}

TEST_CASE("each clause is violated by exactly 2^(n-3) assignments") {
    CnfFormula formula = generate_instance(8, 16, 77);
    for (const Clause& clause : formula.clauses) {
        CnfFormula one;
        one.num_vars = 8;
        one.clauses.push_back(clause);
        BruteForceResult r = brute_force(one);
        CHECK(r.num_satisfying == 256 - 32);
    }
}

TEST_CASE("SAT fraction is non-increasing in m") {
    const int n = 10;
    const int m_grid[] = {5, 10, 20, 30, 42, 50, 60};
    std::vector<double> fractions;
    std::uint64_t seed = 555;
    for (int m : m_grid) {
        int sat = 0;
        for (int i = 0; i < 200; ++i)
            sat += dpll_solve(generate_instance(n, m, seed++)).satisfiable ? 1 : 0;
        fractions.push_back(sat / 200.0);
    }
    int inversions = 0;
    for (std::size_t k = 1; k < fractions.size(); ++k)
        if (fractions[k] > fractions[k - 1]) {
            ++inversions;
            CHECK(fractions[k] - fractions[k - 1] <= 0.05);
        }
    CHECK(inversions <= 1);
}
