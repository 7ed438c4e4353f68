#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "satspec/cnf.hpp"

namespace satspec {

/// Dense real symmetric matrix; houses H(s) for the eigensolver.
using SymmetricMatrix = Eigen::MatrixXd;

/// The pair (H_b, H_p) for one 3-SAT instance, stored structurally:
///   H_p = diag(hp_diag), hp_diag[z] = clauses violated by assignment z
///   H_b = sum_i d_i (1 - sigma_x^(i)) / 2, d = hb_weights
/// Basis-state indexing is little-endian: bit i of z = value of variable i.
struct AqcSystem {
    int num_qubits = 0;
    std::size_t dim = 0; // 2^num_qubits
    std::vector<std::uint32_t> hp_diag;
    std::vector<std::uint32_t> hb_weights;
    CnfFormula source;

    int num_clauses() const { return source.num_clauses(); }
    double clause_ratio() const { return source.clause_ratio(); }
};

/// Builds the structural representation. Satisfies
///   sum(hp_diag) = m * 2^(n-3),  sum(hb_weights) = 3m,
///   min(hp_diag) = 0 iff the formula is satisfiable.
/// Throws ResourceBoundError when n exceeds max_qubits (default 14,
/// dimension 16384).
AqcSystem build_system(const CnfFormula& formula, int max_qubits = 14);

/// Materializes H(s) = (1-s) H_b + s H_p densely. Diagonal entries are
/// (1-s) (sum_i d_i)/2 + s hp_diag[z]; the entry between z and z^(1<<i) is
/// -(1-s) d_i / 2; all else zero. Throws InvalidParameterError outside [0,1].
SymmetricMatrix hamiltonian_at(const AqcSystem& system, double s);

/// Max-abs entry of H_b v, computed structurally (no matrix materialized).
double hb_residual(const AqcSystem& system, const Eigen::VectorXd& v);

/// True iff H_b annihilates the uniform superposition to within 1e-10 * dim.
/// It is an exact eigenvector with eigenvalue 0, so this validates the H_b
/// construction.
bool hb_ground_state_check(const AqcSystem& system);

} // namespace satspec
