#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topoctl/run_config.hpp"
#include "topoctl/spectral.hpp"

namespace topoctl {

struct RunOverrides {
    std::string out_dir;  // empty = config's
    std::optional<std::uint64_t> seed;
    int workers = 0;  // 0 = config's
    std::optional<long> record_every;
    bool write_files = true;
};

struct RunOutcome {
    std::string summary_json;
    std::vector<std::string> files_written;
};

// Everything needed to evolve one trajectory, assembled from a config:
// model, spectrum, controlled system, initial state, resolved targets.
struct PreparedRun {
    QuadraticHamiltonian H0;
    SpectralDecomposition spectrum;
    ControlledSystem sys;
    ModeVector Q0;
    double t_end = 0, dt = 0;
    EvolveOptions options;
    Observables observables;
    std::vector<Eigen::VectorXcd> fidelity_targets;
};

// Builds the run, applying the config's perturbation list plus extras (sweep
// axis points). seed drives any randomized perturbation choices.
PreparedRun prepare_run(const RunConfig& cfg,
                        const std::vector<PerturbationSpec>& extra_perturbations = {},
                        std::uint64_t seed = 0);

// Data-level sweep execution (also used by the acceptance suite).
SweepResult sweep_from_config(const RunConfig& cfg, int workers_override = 0,
                              std::optional<std::uint64_t> seed_override = {});

// File-producing entry points; dispatch via execute(cfg.mode).
RunOutcome run_from_config(const RunConfig& cfg, const RunOverrides& ovr = {});
RunOutcome emit_spectrum(const RunConfig& cfg, const RunOverrides& ovr = {});
RunOutcome emit_sweep(const RunConfig& cfg, const RunOverrides& ovr = {});
RunOutcome execute(const RunConfig& cfg, const RunOverrides& ovr = {});

}  // namespace topoctl
