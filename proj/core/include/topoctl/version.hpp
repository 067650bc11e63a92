#pragma once

namespace topoctl {

inline constexpr const char* kVersion = "1.0.0";

// Bumped whenever a CSV column set or summary key set changes.
inline constexpr int kSchemaVersion = 1;

}  // namespace topoctl
