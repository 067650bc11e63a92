#pragma once

#include <optional>

#include "topoctl/quadratic.hpp"

namespace topoctl {

struct EdgeLabels {
    int left = 0;   // 1-based mode index into the ascending spectrum
    int right = 0;
};

struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;   // ascending, length 2N
    Eigen::MatrixXcd eigenvectors; // columns aligned with eigenvalues
    Statistics stat = Statistics::Fermi;
    std::optional<EdgeLabels> edge_labels;

    int N() const { return int(eigenvalues.size()) / 2; }
    Eigen::VectorXcd mode(int index_1based) const;  // bounds-checked column
};

// Dynamics matrix of -i dQ/dt = Hcal Q:
//   Fermi: [[A, B], [-conj(B), -conj(A)]]
//   Bose:  [[A, -B], [conj(B), -conj(A)]]
Eigen::MatrixXcd bdg_dynamics_matrix(const QuadraticHamiltonian& H);

// Full decomposition, ascending eigenvalues, each column phase-fixed so its
// largest-magnitude component is real positive. Bose requires B = 0 (solved
// as two Hermitian blocks and merged); otherwise UnsupportedDecomposition.
// Edge labels are filled in when identify_edge_modes succeeds.
SpectralDecomposition eigenmodes(const QuadraticHamiltonian& H);

// Mid-gap detection: localization >= 60% in the outer quarter of the chain
// and eigenvalue at least 20% of the enclosing gap away from the nearest
// bulk eigenvalue. Fermi labels the near-degenerate pair by ascending
// eigenvalue (left-half localization breaks ties below 1e-10 splitting);
// Bose labels the annihilation-sector mode "left" and the creation-sector
// mode "right". Throws NoMidGapMode.
EdgeLabels identify_edge_modes(const SpectralDecomposition& spec,
                               const QuadraticHamiltonian& H);

// |X_j|^2 + |Y_j|^2 site weights of one eigenvector.
Eigen::VectorXd site_weights(const Eigen::VectorXcd& U);

struct TrackedEigenpair {
    Eigen::VectorXcd W;
    double lambda = 0;
};

// Eigenpair of the dynamics matrix of H0 + eta*H1 with maximal |overlap|
// against ref, phase-fixed so <ref|W> is real positive. Bose, B = 0 only.
// Throws TrackingLost when the best overlap drops below 0.5.
TrackedEigenpair tracked_eigenvector(const QuadraticHamiltonian& H0,
                                     const QuadraticHamiltonian& H1,
                                     double eta,
                                     const Eigen::VectorXcd& ref);

}  // namespace topoctl
