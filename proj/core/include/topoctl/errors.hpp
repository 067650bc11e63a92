#pragma once

#include <stdexcept>
#include <string>

namespace topoctl {

// Base for everything this library throws. The CLI maps subtrees of this
// hierarchy onto exit codes, so new error types should pick a branch.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- configuration / input errors (exit code 2)
struct ConfigError : Error {
    using Error::Error;
};
struct ConfigParse : ConfigError {
    using ConfigError::ConfigError;
};
struct SchemaViolation : ConfigError {
    SchemaViolation(const std::string& field_path, const std::string& msg)
        : ConfigError(field_path + ": " + msg), field(field_path) {}
    std::string field;
};

// --- numerical failures (exit code 3)
struct NumericalError : Error {
    using Error::Error;
};
struct SolverFailure : NumericalError {
    using NumericalError::NumericalError;
};
struct NormDrift : NumericalError {
    NormDrift(const std::string& msg, double t_last_good_)
        : NumericalError(msg), t_last_good(t_last_good_) {}
    double t_last_good;
};
struct NonRealField : NumericalError {
    using NumericalError::NumericalError;
};
struct NoConvergence : NumericalError {
    using NumericalError::NumericalError;
};
struct TrackingLost : NumericalError {
    using NumericalError::NumericalError;
};
struct NormViolation : NumericalError {
    using NumericalError::NumericalError;
};

// --- model / target resolution errors (exit code 4)
struct ModelError : Error {
    using Error::Error;
};
struct DimensionMismatch : ModelError {
    using ModelError::ModelError;
};
struct SymmetryViolation : ModelError {
    using ModelError::ModelError;
};
struct IndexOutOfRange : ModelError {
    using ModelError::ModelError;
};
struct NoMidGapMode : ModelError {
    using ModelError::ModelError;
};
struct UnsupportedDecomposition : ModelError {
    using ModelError::ModelError;
};
struct NonOrthonormalBasis : ModelError {
    using ModelError::ModelError;
};
struct ChainTooShort : ModelError {
    using ModelError::ModelError;
};
struct InvalidStep : ModelError {
    using ModelError::ModelError;
};

// Exit code the CLI should use for a caught exception.
inline int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ConfigError*>(&e)) return 2;
    if (dynamic_cast<const NumericalError*>(&e)) return 3;
    if (dynamic_cast<const ModelError*>(&e)) return 4;
    return 1;
}

}  // namespace topoctl
