#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "topoctl/dynamics.hpp"
#include "topoctl/models.hpp"

namespace topoctl {

// Q' = sqrt(1-eps) Q0 + sqrt(eps) a_j (annihilation coefficient at site j).
// The mixture must land back on the statistics norm within 1e-9, else
// NormViolation (non-orthogonal mixture).
ModeVector perturb_initial_mode(const ModeVector& Q0, double eps_u, int site_j);

// f'_k(t) = (1 + delta) f_k(t); wraps the law (continuous laws only).
std::unique_ptr<ControlLaw> perturb_control(std::unique_ptr<ControlLaw> law, double delta);

// Boundary-control leakage onto the nearest neighbor: control on site 1
// drives site 2, control on site N drives site N-1, each with on-site
// amplitude delta * f_k(t) * mu_site. Throws ChainTooShort for N < 4.
ControlledSystem neighbor_leakage(ControlledSystem sys, double delta);

enum class BoundaryWhich { J, Delta, Mu };

// Kitaev chain with the chosen parameter scaled by (1 + delta) only in matrix
// elements touching sites 1 and N.
QuadraticHamiltonian perturb_boundary_params(const KitaevParams& p, double delta,
                                             BoundaryWhich which);

// Attachable per-step noise source; n distinct bulk sites (2..N-1) redrawn
// every step with multipliers in [lo, hi].
ControlledSystem::BulkNoise bulk_chemical_noise(const QuadraticHamiltonian& H, int n,
                                                double lo, double hi, std::uint64_t seed);

// sum |U^dag Q|^2 over an orthonormal target list.
double fidelity(const ModeVector& Q, const std::vector<Eigen::VectorXcd>& targets);

struct SweepPoint {
    double axis_value = 0;
    double mean = 0, stddev = 0, min = 0, max = 0;
    int runs = 0;
    int failures = 0;
};

struct SweepResult {
    std::vector<SweepPoint> points;
    std::uint64_t master_seed = 0;
    std::vector<std::string> failure_messages;  // first message per failed point
};

// Executes runs_per_point trajectories per axis value, fanning out over
// workers (0 = hardware concurrency). run_one(axis_index, run_index, seed)
// returns the run's fidelity; exceptions are recorded as failures, not
// propagated. Seeds follow derive_run_seed(master, axis, run), so the result
// is a pure function of master_seed.
SweepResult run_sweep(const std::vector<double>& axis_values, int runs_per_point,
                      int workers, std::uint64_t master_seed,
                      const std::function<double(int, int, std::uint64_t)>& run_one);

}  // namespace topoctl
