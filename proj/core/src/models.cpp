#include "topoctl/models.hpp"

#include <cmath>
#include <string>

#include "topoctl/errors.hpp"

namespace topoctl {

QuadraticHamiltonian build_kitaev(const KitaevParams& p) {
    if (p.N < 2) throw DimensionMismatch("kitaev: need N >= 2");
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(p.N, p.N);
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(p.N, p.N);
    for (int n = 0; n < p.N; ++n) A(n, n) = p.mu;
    for (int n = 0; n + 1 < p.N; ++n) {
        A(n, n + 1) = -p.J;
        A(n + 1, n) = -p.J;
        B(n, n + 1) = 2.0 * p.Delta;   // B_nj = 2 Delta (d_{n,j-1} - d_{n,j+1})
        B(n + 1, n) = -2.0 * p.Delta;
    }
    return validate_quadratic(A, B, Statistics::Fermi);
}

QuadraticHamiltonian build_ssh(const SSHParams& p) {
    if (p.N < 2) throw DimensionMismatch("ssh: need N >= 2");
    if (p.delta < 0 || p.delta > 1)
        throw SymmetryViolation("ssh: dimerization must be in [0, 1]");
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(p.N, p.N);
    for (int n = 0; n < p.N; ++n) A(n, n) = p.mu;
    for (int j = 1; j < p.N; ++j) {  // bond j couples sites j and j+1 (1-based)
        const double amp = -p.J * (1.0 + p.delta * (j % 2 ? -1.0 : 1.0));
        A(j - 1, j) = amp;
        A(j, j - 1) = amp;
    }
    return validate_quadratic(A, Eigen::MatrixXcd::Zero(p.N, p.N), Statistics::Bose);
}

QuadraticHamiltonian boundary_number_control(int N, int site, Statistics stat) {
    if (site < 1 || site > N)
        throw IndexOutOfRange("control site " + std::to_string(site) + " outside 1.." +
                              std::to_string(N));
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(N, N);
    A(site - 1, site - 1) = 1.0;
    return validate_quadratic(A, Eigen::MatrixXcd::Zero(N, N), stat);
}

bool kitaev_phase_is_topological(const KitaevParams& p) {
    return 2.0 * std::abs(p.J) > std::abs(p.mu) && p.Delta != 0.0;
}

}  // namespace topoctl
