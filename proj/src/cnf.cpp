#include "satspec/cnf.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "satspec/errors.hpp"
#include "satspec/rng.hpp"

namespace satspec {

namespace {

/// 8 * C(n,3) without overflow for any sane n.
unsigned long long distinct_clause_bound(int n) {
    unsigned __int128 c3 =
        static_cast<unsigned __int128>(n) * (n - 1) * (n - 2) / 6;
    unsigned __int128 bound = 8 * c3;
    const unsigned __int128 cap = ~0ULL;
    return bound > cap ? ~0ULL : static_cast<unsigned long long>(bound);
}

} // namespace

std::uint64_t clause_key(const Clause& clause) {
    std::array<std::uint64_t, 3> packed;
    for (int i = 0; i < 3; ++i)
        packed[i] = (static_cast<std::uint64_t>(clause[i].var) << 1) |
                    (clause[i].negated ? 1u : 0u);
    std::sort(packed.begin(), packed.end());
    // 21 bits per literal is plenty; keys are unique below ~10^6 variables.
    return (packed[0] << 42) | (packed[1] << 21) | packed[2];
}

bool clause_satisfied(const Clause& clause, std::uint32_t assignment) {
    for (const Literal& lit : clause) {
        bool value = (assignment >> lit.var) & 1u;
        if (value != lit.negated) return true;
    }
    return false;
}

CnfFormula generate_instance(int n, int m, std::uint64_t seed) {
    if (n < 3) throw InvalidParameterError("generate_instance: need n >= 3, got " + std::to_string(n));
    if (m < 1) throw InvalidParameterError("generate_instance: need m >= 1, got " + std::to_string(m));
    const unsigned long long bound = distinct_clause_bound(n);
    if (static_cast<unsigned long long>(m) > bound)
        throw InvalidParameterError("generate_instance: m = " + std::to_string(m) +
                                    " exceeds the distinct-clause bound 8*C(n,3) = " +
                                    std::to_string(bound));

    auto rng = make_rng(seed);
    CnfFormula formula;
    formula.num_vars = n;
    formula.clauses.reserve(m);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(m * 2);

    while (formula.clauses.size() < static_cast<std::size_t>(m)) {
        int vars[3];
        vars[0] = static_cast<int>(uniform_below(rng, n));
        do {
            vars[1] = static_cast<int>(uniform_below(rng, n));
        } while (vars[1] == vars[0]);
        do {
            vars[2] = static_cast<int>(uniform_below(rng, n));
        } while (vars[2] == vars[0] || vars[2] == vars[1]);
        std::sort(std::begin(vars), std::end(vars));

        Clause clause;
        for (int i = 0; i < 3; ++i)
            clause[i] = Literal{vars[i], uniform_below(rng, 2) == 1};

        if (seen.insert(clause_key(clause)).second) formula.clauses.push_back(clause);
        // duplicate: rejected, redraw
    }
    return formula;
}

CnfFormula parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int declared_vars = -1;
    long declared_clauses = -1;

    CnfFormula formula;
    std::unordered_set<std::uint64_t> seen;
    std::vector<int> pending; // literals of the clause being read

    auto finish_clause = [&](int at_line) {
        if (pending.size() != 3)
            throw ParseError("clause of length " + std::to_string(pending.size()), at_line);
        Clause clause;
        for (int i = 0; i < 3; ++i) {
            int lit = pending[static_cast<std::size_t>(i)];
            int var = std::abs(lit) - 1;
            if (var >= declared_vars)
                throw ParseError("variable " + std::to_string(std::abs(lit)) +
                                     " out of range (header declares " +
                                     std::to_string(declared_vars) + ")",
                                 at_line);
            clause[i] = Literal{var, lit < 0};
        }
        if (clause[0].var == clause[1].var || clause[0].var == clause[2].var ||
            clause[1].var == clause[2].var)
            throw ParseError("repeated variable in clause", at_line);
        if (!seen.insert(clause_key(clause)).second) formula.duplicate_warning = true;
        formula.clauses.push_back(clause);
        pending.clear();
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            std::istringstream header(line);
            std::string p, fmt;
            header >> p >> fmt >> declared_vars >> declared_clauses;
            if (header.fail() || fmt != "cnf" || declared_vars < 1 || declared_clauses < 0)
                throw ParseError("malformed header '" + line + "'", line_no);
            continue;
        }
        if (declared_vars < 0) throw ParseError("clause before 'p cnf' header", line_no);

        std::istringstream toks(line);
        int lit;
        while (toks >> lit) {
            if (lit == 0)
                finish_clause(line_no);
            else
                pending.push_back(lit);
        }
        if (!toks.eof()) throw ParseError("unexpected token in '" + line + "'", line_no);
    }
    if (!pending.empty()) throw ParseError("unterminated clause at end of input", line_no);
    if (declared_vars < 0) throw ParseError("missing 'p cnf' header", line_no == 0 ? 1 : line_no);
    if (declared_clauses != static_cast<long>(formula.clauses.size()))
        throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                             std::to_string(formula.clauses.size()),
                         line_no);

    formula.num_vars = declared_vars;
    return formula;
}

std::string emit_dimacs(const CnfFormula& formula) {
    std::string out = "p cnf " + std::to_string(formula.num_vars) + " " +
                      std::to_string(formula.clauses.size()) + "\n";
    for (const Clause& clause : formula.clauses) {
        for (const Literal& lit : clause) {
            out += std::to_string(lit.negated ? -(lit.var + 1) : lit.var + 1);
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

CnfFormula read_dimacs_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dimacs(buf.str());
}

void write_dimacs_file(const CnfFormula& formula, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << emit_dimacs(formula);
    if (!out) throw IoError("write failed for '" + path + "'");
}

} // namespace satspec
