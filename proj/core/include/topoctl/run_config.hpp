#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "topoctl/models.hpp"
#include "topoctl/robustness.hpp"

namespace topoctl {

struct ModelConfig {
    std::string kind;  // "kitaev" | "ssh"
    KitaevParams kitaev;
    SSHParams ssh;
};

struct InitialModeConfig {
    // "uniform_both" | "uniform_annihilation" | "uniform_creation" |
    // "single_site" | "explicit"
    std::string preset = "uniform_both";
    int site = 1;  // single_site
    std::complex<double> C{0, 0}, D{0, 0};
    std::vector<std::complex<double>> C_list, D_list;  // explicit
};

struct PerturbationSpec {
    enum class Kind { InitialMode, ControlScale, NeighborLeakage, BoundaryParam, BulkNoise };
    Kind kind = Kind::ControlScale;
    double eps = 0;   // InitialMode mixing fraction
    int site = 0;     // InitialMode mixture site; 0 = drawn per run
    double delta = 0; // ControlScale / NeighborLeakage / BoundaryParam
    BoundaryWhich which = BoundaryWhich::Mu;
    int n = 0;        // BulkNoise site count
    double lo = -0.02, hi = 0.02;
};

struct LawConfig {
    std::string variant;  // "pmatrix" | "overlap" | "dual_target" | "implicit"
    // edge labels "left"/"right" or decimal 1-based mode indices
    std::vector<std::string> targets;
    std::vector<int> control_sites;  // 1-based
    std::vector<double> gains;
    double theta_slope = 0.5;  // implicit
    bool square_wave = false;
    std::vector<double> clips;
    double dwell = 0;
};

struct IntegratorConfig {
    double dt = 0.01;
    double t_end = 0;
    long record_every = 1;
    std::optional<double> stop_fidelity;
    std::vector<std::string> stop_targets;  // defaults to the law's targets
};

struct SweepConfig {
    std::string axis_kind;  // echo of the axis perturbation kind
    std::vector<double> axis_values;
    std::vector<PerturbationSpec> axis_points;  // one per axis value
    int runs_per_point = 1;
    int workers = 0;  // 0 = hardware concurrency
    bool horizon_from_clean_stop = false;
    double horizon = std::numeric_limits<double>::quiet_NaN();
};

struct OutputConfig {
    std::string dir = ".";
    bool trajectory_csv = true;
    bool summary_json = true;
    bool svg = false;
};

struct RunConfig {
    std::string name = "custom";
    std::string mode = "evolve";  // "evolve" | "spectrum" | "sweep"
    ModelConfig model;
    InitialModeConfig initial;
    LawConfig law;
    IntegratorConfig integrator;
    std::vector<PerturbationSpec> perturbations;
    std::optional<SweepConfig> sweep;
    std::uint64_t seed = 1;
    OutputConfig outputs;
};

// JSON in; throws ConfigParse on malformed text and SchemaViolation (with the
// offending field path) on structural problems.
RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);

// Canonical (sorted-key, compact) echo embedded into every output artifact.
std::string run_config_to_json(const RunConfig& cfg);

}  // namespace topoctl
