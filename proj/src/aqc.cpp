#include "satspec/aqc.hpp"

#include <cmath>

#include "satspec/errors.hpp"

namespace satspec {

AqcSystem build_system(const CnfFormula& formula, int max_qubits) {
    const int n = formula.num_vars;
    if (n < 1) throw InvalidParameterError("build_system: formula has no variables");
    if (n > max_qubits)
        throw ResourceBoundError("build_system: n = " + std::to_string(n) +
                                 " exceeds the qubit bound " + std::to_string(max_qubits));

    AqcSystem system;
    system.num_qubits = n;
    system.dim = std::size_t{1} << n;
    system.source = formula;
    system.hp_diag.assign(system.dim, 0);
    system.hb_weights.assign(n, 0);

    for (const Clause& clause : formula.clauses) {
        std::uint32_t care = 0, bad = 0;
        for (const Literal& lit : clause) {
            if (lit.var < 0 || lit.var >= n)
                throw InvalidParameterError("build_system: literal variable out of range");
            care |= 1u << lit.var;
            if (lit.negated) bad |= 1u << lit.var;
            ++system.hb_weights[lit.var];
        }
        // The clause is violated exactly by assignments matching `bad` on its
        // three variables: 2^(n-3) of them.
        for (std::size_t z = 0; z < system.dim; ++z)
            if ((static_cast<std::uint32_t>(z) & care) == bad) ++system.hp_diag[z];
    }
    return system;
}

SymmetricMatrix hamiltonian_at(const AqcSystem& system, double s) {
    if (!(s >= 0.0 && s <= 1.0))
        throw InvalidParameterError("hamiltonian_at: s must lie in [0,1]");

    const std::size_t dim = system.dim;
    double weight_sum = 0.0;
    for (std::uint32_t d : system.hb_weights) weight_sum += d;

    SymmetricMatrix h = SymmetricMatrix::Zero(dim, dim);
    const double diag_b = (1.0 - s) * weight_sum / 2.0;
    for (std::size_t z = 0; z < dim; ++z)
        h(z, z) = diag_b + s * system.hp_diag[z];

    // sigma_x on qubit i couples z with z ^ (1 << i).
    for (int i = 0; i < system.num_qubits; ++i) {
        const double coupling = -(1.0 - s) * system.hb_weights[i] / 2.0;
        if (coupling == 0.0) continue;
        const std::size_t bit = std::size_t{1} << i;
        for (std::size_t z = 0; z < dim; ++z)
            if (!(z & bit)) {
                h(z, z | bit) = coupling;
                h(z | bit, z) = coupling;
            }
    }
    return h;
}

double hb_residual(const AqcSystem& system, const Eigen::VectorXd& v) {
    if (static_cast<std::size_t>(v.size()) != system.dim)
        throw InvalidParameterError("hb_residual: vector length != dim");
    double max_abs = 0.0;
    for (std::size_t z = 0; z < system.dim; ++z) {
        double y = 0.0;
        for (int i = 0; i < system.num_qubits; ++i) {
            const std::size_t w = z ^ (std::size_t{1} << i);
            y += 0.5 * system.hb_weights[i] * (v(z) - v(w));
        }
        max_abs = std::max(max_abs, std::abs(y));
    }
    return max_abs;
}

bool hb_ground_state_check(const AqcSystem& system) {
    Eigen::VectorXd uniform =
        Eigen::VectorXd::Constant(system.dim, std::pow(2.0, -0.5 * system.num_qubits));
    return hb_residual(system, uniform) <= 1e-10 * static_cast<double>(system.dim);
}

} // namespace satspec
