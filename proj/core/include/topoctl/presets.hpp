#pragma once

#include <string>
#include <vector>

#include "topoctl/run_config.hpp"

namespace topoctl {

// Bundled configurations: fig1..fig7, fig8a, fig8b, fig9, fig10a, fig10b,
// fig11. Multi-panel figures are split into separately runnable presets.
std::vector<std::string> preset_names();

bool is_preset(const std::string& name);

// Throws IndexOutOfRange for unknown names.
RunConfig preset_config(const std::string& name);

}  // namespace topoctl
