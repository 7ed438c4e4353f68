#include "satspec/solver.hpp"

#include <algorithm>

#include "satspec/errors.hpp"

namespace satspec {

namespace {

void validate_formula(const CnfFormula& formula) {
    if (formula.num_vars < 1) throw InvalidParameterError("formula has no variables");
    for (const Clause& clause : formula.clauses) {
        for (const Literal& lit : clause)
            if (lit.var < 0 || lit.var >= formula.num_vars)
                throw InvalidParameterError("literal variable out of range");
        if (clause[0].var == clause[1].var || clause[0].var == clause[2].var ||
            clause[1].var == clause[2].var)
            throw InvalidParameterError("clause with repeated variable");
    }
}

/// Backtracking search with counter-based clause state. A literal is encoded
/// as 2*var + (negated ? 1 : 0).
class Dpll {
public:
    explicit Dpll(const CnfFormula& formula)
        : n_(formula.num_vars), clauses_(formula.clauses) {
        vals_.assign(n_, -1);
        occ_.assign(2 * static_cast<std::size_t>(n_), {});
        active_.assign(2 * static_cast<std::size_t>(n_), 0);
        sat_count_.assign(clauses_.size(), 0);
        false_count_.assign(clauses_.size(), 0);
        unsat_clauses_ = clauses_.size();
        for (std::size_t c = 0; c < clauses_.size(); ++c)
            for (const Literal& lit : clauses_[c]) {
                occ_[code(lit)].push_back(c);
                ++active_[code(lit)];
            }
    }

    SatResult run() {
        SatResult result;
        if (clauses_.empty()) {
            result.satisfiable = true;
            result.model = std::vector<bool>(n_, false);
            return result;
        }
        result.satisfiable = node(-1, false);
        result.dpll_decisions = decisions_;
        result.dpll_propagations = propagations_;
        if (result.satisfiable) {
            std::vector<bool> model(n_);
            for (int v = 0; v < n_; ++v) model[v] = vals_[v] == 1;
            result.model = model;
        }
        return result;
    }

private:
    static std::size_t code(const Literal& lit) {
        return 2 * static_cast<std::size_t>(lit.var) + (lit.negated ? 1 : 0);
    }

    // One search-tree node: apply the branch assignment (if any), propagate
    // units and pure literals to fixpoint, then branch on the lowest-index
    // variable still occurring in an unsatisfied clause, true first.
    bool node(int branch_var, bool branch_val) {
        ++decisions_;
        const std::size_t mark = trail_.size();
        bool ok = branch_var < 0 || assign(branch_var, branch_val);
        ok = ok && propagate();
        if (!ok) {
            undo_to(mark);
            units_.clear();
            return false;
        }
        if (unsat_clauses_ == 0) return true;

        int v = -1;
        for (int cand = 0; cand < n_; ++cand)
            if (vals_[cand] < 0 && (active_[2 * cand] + active_[2 * cand + 1]) > 0) {
                v = cand;
                break;
            }
        // unsat_clauses_ > 0 guarantees some clause still has an unassigned
        // literal, so v is found.
        if (node(v, true)) return true;
        if (node(v, false)) return true;
        undo_to(mark);
        return false;
    }

    // Returns false on conflict. Counters stay consistent either way so the
    // caller can undo.
    bool assign(int var, bool val) {
        vals_[var] = val ? 1 : 0;
        trail_.push_back(var);
        bool conflict = false;
        for (std::size_t c : occ_[2 * var + (val ? 0 : 1)]) { // literal now true
            if (sat_count_[c]++ == 0) {
                --unsat_clauses_;
                for (const Literal& lit : clauses_[c]) --active_[code(lit)];
            }
        }
        for (std::size_t c : occ_[2 * var + (val ? 1 : 0)]) { // literal now false
            ++false_count_[c];
            if (sat_count_[c] == 0) {
                if (false_count_[c] == 3)
                    conflict = true;
                else if (false_count_[c] == 2)
                    units_.push_back(c);
            }
        }
        return !conflict;
    }

    void unassign(int var) {
        const bool val = vals_[var] == 1;
        vals_[var] = -1;
        for (std::size_t c : occ_[2 * var + (val ? 0 : 1)]) {
            if (--sat_count_[c] == 0) {
                ++unsat_clauses_;
                for (const Literal& lit : clauses_[c]) ++active_[code(lit)];
            }
        }
        for (std::size_t c : occ_[2 * var + (val ? 1 : 0)]) --false_count_[c];
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            unassign(trail_.back());
            trail_.pop_back();
        }
    }

    bool propagate() {
        for (;;) {
            while (!units_.empty()) {
                std::size_t c = units_.back();
                units_.pop_back();
                if (sat_count_[c] > 0) continue;
                if (false_count_[c] == 3) return false;
                if (false_count_[c] != 2) continue; // stale entry
                for (const Literal& lit : clauses_[c])
                    if (vals_[lit.var] < 0) {
                        ++propagations_;
                        if (!assign(lit.var, !lit.negated)) return false;
                        break;
                    }
            }
            // Pure literals: assigning them only satisfies clauses, so this
            // can neither conflict nor create units, only further pures.
            bool changed = false;
            for (int v = 0; v < n_; ++v) {
                if (vals_[v] >= 0) continue;
                const int pos = active_[2 * v], neg = active_[2 * v + 1];
                if (pos > 0 && neg == 0) {
                    assign(v, true);
                    changed = true;
                } else if (neg > 0 && pos == 0) {
                    assign(v, false);
                    changed = true;
                }
            }
            if (!changed && units_.empty()) return true;
        }
    }

    int n_;
    const std::vector<Clause>& clauses_;
    std::vector<signed char> vals_;
    std::vector<std::vector<std::size_t>> occ_;
    std::vector<int> active_; // per literal: occurrences in unsatisfied clauses
    std::vector<int> sat_count_;
    std::vector<int> false_count_;
    std::size_t unsat_clauses_;
    std::vector<int> trail_;
    std::vector<std::size_t> units_;
    std::uint64_t decisions_ = 0;
    std::uint64_t propagations_ = 0;
};

} // namespace

SatResult dpll_solve(const CnfFormula& formula) {
    validate_formula(formula);
    return Dpll(formula).run();
}

BruteForceResult brute_force(const CnfFormula& formula) {
    validate_formula(formula);
    if (formula.num_vars > 24)
        throw ResourceBoundError("brute_force: n = " + std::to_string(formula.num_vars) +
                                 " exceeds the enumeration bound 24");

    // A clause is violated iff all three literals are false, i.e. the three
    // care bits match the forbidden pattern.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> masks; // (care, bad)
    masks.reserve(formula.clauses.size());
    for (const Clause& clause : formula.clauses) {
        std::uint32_t care = 0, bad = 0;
        for (const Literal& lit : clause) {
            care |= 1u << lit.var;
            if (lit.negated) bad |= 1u << lit.var;
        }
        masks.emplace_back(care, bad);
    }

    const std::uint64_t total = 1ULL << formula.num_vars;
    std::uint64_t satisfying = 0;
    for (std::uint64_t z = 0; z < total; ++z) {
        bool ok = true;
        for (const auto& [care, bad] : masks)
            if ((static_cast<std::uint32_t>(z) & care) == bad) {
                ok = false;
                break;
            }
        satisfying += ok;
    }
    return BruteForceResult{satisfying > 0, satisfying};
}

bool satisfies(const CnfFormula& formula, const std::vector<bool>& assignment) {
    if (assignment.size() != static_cast<std::size_t>(formula.num_vars)) return false;
    std::uint32_t z = 0;
    for (int v = 0; v < formula.num_vars; ++v)
        if (assignment[v]) z |= 1u << v;
    return std::all_of(formula.clauses.begin(), formula.clauses.end(),
                       [z](const Clause& c) { return clause_satisfied(c, z); });
}

} // namespace satspec
