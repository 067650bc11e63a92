#pragma once

#include <Eigen/Dense>

#include "topoctl/statistics.hpp"

namespace topoctl {

// H = sum_ij A_ij a_i^dag a_j + 1/2 sum_ij (B_ij a_i^dag a_j^dag + h.c.)
// with A Hermitian and B antisymmetric (Fermi) / symmetric (Bose).
struct QuadraticHamiltonian {
    int N = 0;
    Eigen::MatrixXcd A;
    Eigen::MatrixXcd B;
    Statistics stat = Statistics::Fermi;
};

inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kModeNormTol = 1e-9;

// Validates A = A^dag and B = eps_stat * B^T to kSymmetryTol (max element
// residual) and N >= 2. Throws SymmetryViolation / DimensionMismatch.
QuadraticHamiltonian validate_quadratic(const Eigen::MatrixXcd& A,
                                        const Eigen::MatrixXcd& B,
                                        Statistics stat);

// Coefficient vector Q = (C_1*..C_N*, D_1*..D_N*) of a quasiparticle mode.
struct ModeVector {
    Eigen::VectorXcd q;
    Statistics stat = Statistics::Fermi;

    int N() const { return int(q.size()) / 2; }
};

// Fermi: sum(|C|^2 + |D|^2).  Bose: |sum(|C|^2 - |D|^2)| (pseudo-norm).
double mode_norm(const ModeVector& Q);

// Same quantity evaluated on a raw coefficient vector.
double stat_norm(const Eigen::VectorXcd& q, Statistics stat);

// Checks the statistics norm invariant (== 1 within kModeNormTol); throws
// NormViolation.
ModeVector make_mode_vector(Eigen::VectorXcd q, Statistics stat);

}  // namespace topoctl
