#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topoctl/control.hpp"
#include "topoctl/quadratic.hpp"

namespace topoctl {

struct ControlledSystem {
    QuadraticHamiltonian H0;
    std::vector<QuadraticHamiltonian> controls;
    std::shared_ptr<ControlLaw> law;  // may be null iff controls is empty

    // control-field leakage onto a neighbor site: A_{site,site} gains
    // coeff * f_{control}(t)
    struct Leakage {
        int site = 0;     // 1-based
        int control = 0;  // index into controls
        double coeff = 0;
    };
    std::vector<Leakage> leakage;

    // per-step random on-site perturbation: n distinct bulk sites, each with
    // an independent multiplier in [lo, hi] applied to its clean potential
    struct BulkNoise {
        int n = 0;
        double lo = 0, hi = 0;
        std::uint64_t seed = 0;
    };
    std::optional<BulkNoise> noise;
};

// Throws DimensionMismatch unless H0 and every control share N and statistics.
void validate_system(const ControlledSystem& sys);

struct Trajectory {
    Statistics stat = Statistics::Fermi;
    std::vector<double> times;                  // thinned by record_every
    std::vector<Eigen::VectorXcd> states;
    std::vector<std::vector<double>> fields;    // [sample][k]
    std::vector<double> lyapunov;
    std::vector<std::pair<std::string, std::vector<double>>> occupations;

    double t_final = 0;
    Eigen::VectorXcd q_final;
    long total_steps = 0;
    bool stopped = false;                        // stop-fidelity rule fired
    double stop_time = std::numeric_limits<double>::quiet_NaN();
    double stop_value = std::numeric_limits<double>::quiet_NaN();

    // audited every step regardless of thinning
    double max_norm_drift = 0;   // max |stat_norm(q) - stat_norm(q0)|
    double max_v_increase = 0;   // max over steps of V(n+1) - V(n), clamped at 0
};

struct EvolveOptions {
    long record_every = 1;
    double norm_abort = 1e-6;  // NormDrift threshold on |stat_norm - initial|
    // early termination when sum_i |target_i^dag q|^2 >= stop_fidelity
    double stop_fidelity = std::numeric_limits<double>::quiet_NaN();
    std::vector<Eigen::VectorXcd> stop_targets;
};

using Observables = std::vector<std::pair<std::string, Eigen::VectorXcd>>;

// Fixed-step RK4 for -i dQ/dt = (H0 + sum_k f_k Hk) Q. Continuous laws are
// re-evaluated inside every stage; hold_per_step laws are sampled once per
// step. Throws InvalidStep and NormDrift (latter reports the last good time).
Trajectory evolve(const ControlledSystem& sys, const ModeVector& Q0,
                  double t_end, double dt, const Observables& observables = {},
                  const EvolveOptions& opt = {});

// |Q^dag U|^2
double occupation(const ModeVector& Q, const Eigen::VectorXcd& U);

// sum over an orthonormal set; pairwise overlap above 1e-8 throws
// NonOrthonormalBasis
double subspace_occupation(const ModeVector& Q, const std::vector<Eigen::VectorXcd>& Us);

}  // namespace topoctl
