#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "satspec/cnf.hpp"

namespace satspec {

struct SatResult {
    bool satisfiable = false;
    /// Search-tree nodes explored: the root node plus every branch taken.
    /// At least 1 for any formula with clauses.
    std::uint64_t dpll_decisions = 0;
    /// Unit-clause assignments made during propagation.
    std::uint64_t dpll_propagations = 0;
    /// A satisfying assignment when satisfiable; bit i = variable i.
    std::optional<std::vector<bool>> model;
};

/// DPLL with unit propagation and pure-literal elimination applied at every
/// node before branching. Branch variable is the lowest-index unassigned
/// variable, true branch first, so decision counts are reproducible.
SatResult dpll_solve(const CnfFormula& formula);

struct BruteForceResult {
    bool satisfiable = false;
    std::uint64_t num_satisfying = 0;
};

/// Exact enumeration over all 2^n assignments. Ground-truth oracle; throws
/// ResourceBoundError for n > 24.
BruteForceResult brute_force(const CnfFormula& formula);

/// True iff the assignment satisfies every clause.
bool satisfies(const CnfFormula& formula, const std::vector<bool>& assignment);

} // namespace satspec
