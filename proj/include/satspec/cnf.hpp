#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace satspec {

/// A possibly negated boolean variable. `var` indexes into [0, num_vars).
struct Literal {
    int var = 0;
    bool negated = false;

    friend bool operator==(const Literal&, const Literal&) = default;
};

/// Exactly three literals over three distinct variables.
using Clause = std::array<Literal, 3>;

/// A random or parsed 3-SAT instance with m = clauses.size() clauses over
/// num_vars variables. Generated formulas never contain two clauses equal up
/// to literal reordering; parsed external files may, and are accepted with
/// duplicate_warning set.
struct CnfFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;
    bool duplicate_warning = false;

    int num_clauses() const { return static_cast<int>(clauses.size()); }
    double clause_ratio() const {
        return num_vars == 0 ? 0.0 : static_cast<double>(clauses.size()) / num_vars;
    }
};

/// Order-insensitive clause fingerprint: the three (var, sign) pairs sorted
/// and packed. Two clauses collide iff they are equal up to reordering.
std::uint64_t clause_key(const Clause& clause);

/// True iff the assignment (bit i of `assignment` = value of variable i)
/// satisfies the clause.
bool clause_satisfied(const Clause& clause, std::uint32_t assignment);

/// Draws m clauses over n variables: three distinct variables chosen
/// uniformly, each negated with probability 1/2, duplicates (up to literal
/// order) rejected and redrawn. Deterministic for a fixed seed.
///
/// Throws InvalidParameterError for n < 3, m < 1, or m > 8*C(n,3).
CnfFormula generate_instance(int n, int m, std::uint64_t seed);

/// Parses DIMACS CNF ("p cnf <vars> <clauses>" header, clauses as signed
/// 1-based integers terminated by 0). Clauses must have exactly three
/// literals over distinct variables; violations raise ParseError with the
/// offending line. Duplicate clauses only set duplicate_warning.
CnfFormula parse_dimacs(std::string_view text);

/// Canonical DIMACS encoding: header line, then one clause per line, LF
/// endings. emit(parse(t)) == t for canonical t.
std::string emit_dimacs(const CnfFormula& formula);

CnfFormula read_dimacs_file(const std::string& path);
void write_dimacs_file(const CnfFormula& formula, const std::string& path);

} // namespace satspec
