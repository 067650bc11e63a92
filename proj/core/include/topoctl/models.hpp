#pragma once

#include "topoctl/quadratic.hpp"

namespace topoctl {

struct KitaevParams {
    int N = 0;
    double J = 0;
    double Delta = 0;
    double mu = 0;
};

struct SSHParams {
    int N = 0;
    double J = 0;
    double delta = 0;  // dimerization in [0, 1]
    double mu = 0;
};

// Open Kitaev chain:
//   A_nj = mu d_nj - J (d_{n,j+1} + d_{n,j-1})
//   B_nj = 2 Delta (d_{n,j-1} - d_{n,j+1})
QuadraticHamiltonian build_kitaev(const KitaevParams& p);

// Open SSH chain (bosonic), bond (j, j+1) amplitude -J[1 + delta (-1)^j],
// on-site mu, B = 0. Bond index j runs 1..N-1, so bond 1 carries -J(1-delta).
QuadraticHamiltonian build_ssh(const SSHParams& p);

// Number operator on one site: A_{site,site} = 1, B = 0. Sites are 1-based.
QuadraticHamiltonian boundary_number_control(int N, int site, Statistics stat);

// Nontrivial topological phase iff 2|J| > |mu| and Delta != 0.
bool kitaev_phase_is_topological(const KitaevParams& p);

}  // namespace topoctl
